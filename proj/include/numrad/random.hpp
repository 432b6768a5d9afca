#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "numrad/complex_matrix.hpp"

namespace numrad {

std::uint64_t splitmix64(std::uint64_t x) noexcept;
/// Order-sensitive mix of a running hash with one more word.
std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) noexcept;
std::uint64_t hash_string(std::string_view s) noexcept;
/// Hash of the dimension and the exact bit patterns of the entries.
std::uint64_t matrix_hash(const ComplexMatrix& a) noexcept;

/// Deterministic generator: mt19937_64 with explicitly defined uniform and
/// Gaussian transforms, so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller.
  double normal();
  /// Standard complex Gaussian: E|z|^2 = 1.
  cplx complex_normal();
  std::vector<cplx> unit_vector(std::size_t n);
  ComplexMatrix ginibre(std::size_t n);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace numrad
