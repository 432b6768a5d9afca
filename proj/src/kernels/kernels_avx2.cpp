// Compiled with -mavx2 -mfma; only reached through dispatch after a CPU check.
#include <immintrin.h>

#include "kernels_internal.hpp"

namespace numrad::kernels {
namespace {

// Two complex doubles per register, interleaved [re0 im0 re1 im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }
inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0x5); }

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void gemm_avx2(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  const std::size_t pairs = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx* ai = a + i * n;
    cplx* ci = c + i * n;
    for (std::size_t jp = 0; jp < pairs; ++jp) {
      __m256d acc_re = _mm256_setzero_pd();
      __m256d acc_im = _mm256_setzero_pd();
      for (std::size_t k = 0; k < n; ++k) {
        const __m256d bk = load2(b + k * n + 2 * jp);
        acc_re = _mm256_fmadd_pd(_mm256_set1_pd(ai[k].real()), bk, acc_re);
        acc_im = _mm256_fmadd_pd(_mm256_set1_pd(ai[k].imag()), swap_re_im(bk), acc_im);
      }
      store2(ci + 2 * jp, _mm256_addsub_pd(acc_re, acc_im));
    }
    if (n % 2 != 0) {
      const std::size_t j = n - 1;
      double re = 0.0;
      double im = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const cplx bk = b[k * n + j];
        re += ai[k].real() * bk.real() - ai[k].imag() * bk.imag();
        im += ai[k].real() * bk.imag() + ai[k].imag() * bk.real();
      }
      ci[j] = cplx(re, im);
    }
  }
}

cplx dot_avx2(std::size_t len, const cplx* x, const cplx* y) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d vx = load2(x + i);
    const __m256d vy = load2(y + i);
    acc_re = _mm256_fmadd_pd(vx, vy, acc_re);
    acc_im = _mm256_fmadd_pd(vx, swap_re_im(vy), acc_im);
  }
  double re = hsum(acc_re);
  // lanes of acc_im are [xr*yi, xi*yr, ...]; imag part is odd minus even
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc_im);
  double im = (lanes[1] + lanes[3]) - (lanes[0] + lanes[2]);
  for (; i < len; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].imag() * y[i].real() - x[i].real() * y[i].imag();
  }
  return {re, im};
}

void gemv_avx2(std::size_t n, const cplx* a, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const cplx* ai = a + i * n;
    __m256d acc_a = _mm256_setzero_pd();
    __m256d acc_b = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
      const __m256d va = load2(ai + j);
      const __m256d vx = load2(x + j);
      acc_a = _mm256_fmadd_pd(va, vx, acc_a);
      acc_b = _mm256_fmadd_pd(va, swap_re_im(vx), acc_b);
    }
    alignas(32) double la[4];
    _mm256_store_pd(la, acc_a);
    double re = (la[0] + la[2]) - (la[1] + la[3]);
    double im = hsum(acc_b);
    for (; j < n; ++j) {
      re += ai[j].real() * x[j].real() - ai[j].imag() * x[j].imag();
      im += ai[j].real() * x[j].imag() + ai[j].imag() * x[j].real();
    }
    y[i] = cplx(re, im);
  }
}

void axpby_avx2(std::size_t len, double alpha, const cplx* x, double beta, const cplx* y, cplx* out) {
  const __m256d va = _mm256_set1_pd(alpha);
  const __m256d vb = _mm256_set1_pd(beta);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    store2(out + i, _mm256_fmadd_pd(va, load2(x + i), _mm256_mul_pd(vb, load2(y + i))));
  }
  for (; i < len; ++i) {
    out[i] = cplx(alpha * x[i].real() + beta * y[i].real(), alpha * x[i].imag() + beta * y[i].imag());
  }
}

void rotate_pair_avx2(std::size_t len, cplx* x, cplx* y, double c, cplx s) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d s_re = _mm256_set1_pd(s.real());
  const __m256d s_im = _mm256_set1_pd(s.imag());
  const __m256d neg_s_im = _mm256_set1_pd(-s.imag());
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d vx = load2(x + i);
    const __m256d vy = load2(y + i);
    const __m256d sy = _mm256_fmaddsub_pd(s_re, vy, _mm256_mul_pd(s_im, swap_re_im(vy)));
    const __m256d csx = _mm256_fmaddsub_pd(s_re, vx, _mm256_mul_pd(neg_s_im, swap_re_im(vx)));
    store2(x + i, _mm256_fmsub_pd(vc, vx, sy));
    store2(y + i, _mm256_fmadd_pd(vc, vy, csx));
  }
  const double sr = s.real();
  const double si = s.imag();
  for (; i < len; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    const double yr = y[i].real();
    const double yi = y[i].imag();
    x[i] = cplx(c * xr - (sr * yr - si * yi), c * xi - (sr * yi + si * yr));
    y[i] = cplx(c * yr + (sr * xr + si * xi), c * yi + (sr * xi - si * xr));
  }
}

constexpr KernelTable kAvx2{
    "avx2", gemm_avx2, gemv_avx2, dot_avx2, axpby_avx2, rotate_pair_avx2,
};

}  // namespace

namespace detail {
const KernelTable& avx2_table_unchecked() noexcept { return kAvx2; }
}  // namespace detail

}  // namespace numrad::kernels
