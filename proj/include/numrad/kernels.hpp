#pragma once

// Inner loops shared by the eigensolver, matrix products and quadratic forms.
// Every routine has a portable scalar reference; an AVX2/FMA variant is used
// when the running CPU supports it. The two agree to rounding (FMA contracts
// differently), which tests/test_kernels.cpp checks.

#include <complex>
#include <cstddef>
#include <string_view>

namespace numrad::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  const char* name;
  /// c = a * b for row-major n x n matrices; c must not alias a or b.
  void (*gemm)(std::size_t n, const cplx* a, const cplx* b, cplx* c);
  /// y = a * x for a row-major n x n matrix.
  void (*gemv)(std::size_t n, const cplx* a, const cplx* x, cplx* y);
  /// sum_i x_i * conj(y_i).
  cplx (*dot)(std::size_t len, const cplx* x, const cplx* y);
  /// out = alpha * x + beta * y (real coefficients). out may alias x or y.
  void (*axpby)(std::size_t len, double alpha, const cplx* x, double beta, const cplx* y, cplx* out);
  /// Plane rotation of two rows: x' = c x - s y, y' = conj(s) x + c y.
  void (*rotate_pair)(std::size_t len, cplx* x, cplx* y, double c, cplx s);
};

const KernelTable& scalar_table() noexcept;
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table() noexcept;

/// The table used by the library. Chosen once from the CPU features unless
/// NUMRAD_KERNELS=scalar is set in the environment.
const KernelTable& active() noexcept;

/// Overrides the active table ("scalar" or "avx2"); returns false if the
/// requested variant is unavailable. Intended for tests and benchmarks; not
/// safe to call while other threads are computing.
bool select(std::string_view name) noexcept;

}  // namespace numrad::kernels
