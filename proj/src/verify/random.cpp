#include "numrad/random.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace numrad {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) noexcept {
  return splitmix64(h ^ splitmix64(v + 0x632be59bd9b4e019ULL));
}

std::uint64_t hash_string(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(h);
}

std::uint64_t matrix_hash(const ComplexMatrix& a) noexcept {
  std::uint64_t h = splitmix64(a.n());
  for (const cplx& z : a.data()) {
    h = hash_combine(h, std::bit_cast<std::uint64_t>(z.real()));
    h = hash_combine(h, std::bit_cast<std::uint64_t>(z.imag()));
  }
  return h;
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

cplx Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return cplx(re, im) * (1.0 / std::numbers::sqrt2);
}

std::vector<cplx> Rng::unit_vector(std::size_t n) {
  std::vector<cplx> v(n);
  double s = 0.0;
  do {
    for (auto& z : v) z = complex_normal();
    s = vec_norm(v);
  } while (s == 0.0);
  for (auto& z : v) z /= s;
  return v;
}

ComplexMatrix Rng::ginibre(std::size_t n) {
  ComplexMatrix a(n);
  for (auto& z : a.data()) z = complex_normal();
  return a;
}

}  // namespace numrad
