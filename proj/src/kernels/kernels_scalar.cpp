#include "numrad/kernels.hpp"

#include "kernels_internal.hpp"

namespace numrad::kernels {
namespace {

void gemm_scalar(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  for (std::size_t i = 0; i < n * n; ++i) c[i] = cplx(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    cplx* ci = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = a[i * n + k].real();
      const double ai = a[i * n + k].imag();
      const cplx* bk = b + k * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = bk[j].real();
        const double bi = bk[j].imag();
        ci[j] = cplx(ci[j].real() + (ar * br - ai * bi), ci[j].imag() + (ar * bi + ai * br));
      }
    }
  }
}

cplx dot_scalar(std::size_t len, const cplx* x, const cplx* y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    // x * conj(y)
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].imag() * y[i].real() - x[i].real() * y[i].imag();
  }
  return {re, im};
}

void gemv_scalar(std::size_t n, const cplx* a, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) {
    double re = 0.0;
    double im = 0.0;
    const cplx* ai = a + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      re += ai[j].real() * x[j].real() - ai[j].imag() * x[j].imag();
      im += ai[j].real() * x[j].imag() + ai[j].imag() * x[j].real();
    }
    y[i] = cplx(re, im);
  }
}

void axpby_scalar(std::size_t len, double alpha, const cplx* x, double beta, const cplx* y, cplx* out) {
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = cplx(alpha * x[i].real() + beta * y[i].real(), alpha * x[i].imag() + beta * y[i].imag());
  }
}

void rotate_pair_scalar(std::size_t len, cplx* x, cplx* y, double c, cplx s) {
  const double sr = s.real();
  const double si = s.imag();
  for (std::size_t i = 0; i < len; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    const double yr = y[i].real();
    const double yi = y[i].imag();
    // x' = c x - s y ; y' = conj(s) x + c y
    x[i] = cplx(c * xr - (sr * yr - si * yi), c * xi - (sr * yi + si * yr));
    y[i] = cplx(c * yr + (sr * xr + si * xi), c * yi + (sr * xi - si * xr));
  }
}

constexpr KernelTable kScalar{
    "scalar", gemm_scalar, gemv_scalar, dot_scalar, axpby_scalar, rotate_pair_scalar,
};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace numrad::kernels
