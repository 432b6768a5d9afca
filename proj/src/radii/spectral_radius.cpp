#include <algorithm>
#include <cmath>
#include <limits>

#include "numrad/hermitian.hpp"
#include "numrad/radii.hpp"

namespace numrad {
namespace {

constexpr int kSquarings = 40;

std::vector<cplx> normalized(std::vector<cplx> v) {
  const double s = vec_norm(v);
  if (s > 0.0) {
    for (auto& z : v) z /= s;
  }
  return v;
}

// Eigenvector of an upper triangular matrix for the first diagonal entry of
// largest modulus; entries before it have strictly smaller modulus.
std::vector<cplx> upper_triangular_eigvec(const ComplexMatrix& a, std::size_t k) {
  const std::size_t n = a.n();
  std::vector<cplx> v(n, cplx(0.0, 0.0));
  const cplx lam = a(k, k);
  v[k] = 1.0;
  for (std::size_t ii = k; ii-- > 0;) {
    cplx s = 0.0;
    for (std::size_t j = ii + 1; j <= k; ++j) s += a(ii, j) * v[j];
    v[ii] = s / (lam - a(ii, ii));
  }
  return normalized(std::move(v));
}

std::vector<cplx> lower_triangular_eigvec(const ComplexMatrix& a, std::size_t k) {
  const std::size_t n = a.n();
  std::vector<cplx> v(n, cplx(0.0, 0.0));
  const cplx lam = a(k, k);
  v[k] = 1.0;
  for (std::size_t i = k + 1; i < n; ++i) {
    cplx s = 0.0;
    for (std::size_t j = k; j < i; ++j) s += a(i, j) * v[j];
    v[i] = s / (lam - a(i, i));
  }
  return normalized(std::move(v));
}

RadiusEstimate exact(double value, std::vector<cplx> witness) {
  RadiusEstimate r;
  r.value = value;
  r.lower_cert = value;
  r.upper_cert = value;
  r.witness = std::move(witness);
  r.method = RadiusMethod::power_gelfand;
  return r;
}

}  // namespace

RadiusEstimate spectral_radius(const ComplexMatrix& b) {
  const std::size_t n = b.n();
  const bool upper = is_upper_triangular(b);
  const bool lower = is_lower_triangular(b);
  if (upper || lower) {
    std::size_t first = 0, last = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(b(i, i));
      if (m > best) {
        best = m;
        first = i;
      }
      if (m >= best) last = i;
    }
    if (best == 0.0) return exact(0.0, normalized(std::vector<cplx>(n, cplx(1.0, 0.0))));
    return exact(best, upper ? upper_triangular_eigvec(b, first) : lower_triangular_eigvec(b, last));
  }

  const double s = op_norm(b);
  if (s == 0.0) return exact(0.0, normalized(std::vector<cplx>(n, cplx(1.0, 0.0))));

  ComplexMatrix m = b;
  m *= 1.0 / s;
  // log r = log s + sum_j log(n_j) / 2^(j+1), n_j = ||B_j^2||, B_{j+1} = B_j^2 / n_j.
  // Every partial sum is log ||B0^(2^k)||^(1/2^k), an upper bound.
  double log_est = 0.0;
  double log_best_upper = 0.0;
  double weight = 0.5;
  for (int j = 0; j < kSquarings; ++j) {
    ComplexMatrix sq = m * m;
    const double nj = op_norm(sq);
    if (nj == 0.0) {
      return exact(0.0, normalized(std::vector<cplx>(m.row(0).begin(), m.row(0).end())));
    }
    log_est += weight * std::log(nj);
    log_best_upper = std::min(log_best_upper, log_est);
    weight *= 0.5;
    sq *= 1.0 / nj;
    m = std::move(sq);
  }

  // dominant column of the normalized power
  std::size_t col = 0;
  double col_norm = -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) c += std::norm(m(i, j));
    if (c > col_norm) {
      col_norm = c;
      col = j;
    }
  }
  std::vector<cplx> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = m(i, col);

  RadiusEstimate r;
  r.value = s * std::exp(log_est);
  r.lower_cert = r.value;
  r.upper_cert = std::max(r.value, s * std::exp(log_best_upper) * (1.0 + 1e-12));
  r.witness = normalized(std::move(w));
  r.method = RadiusMethod::power_gelfand;
  return r;
}

}  // namespace numrad
