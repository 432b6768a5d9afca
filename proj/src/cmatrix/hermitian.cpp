#include "numrad/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "numrad/error.hpp"
#include "numrad/kernels.hpp"

namespace numrad {
namespace {

constexpr int kMaxSweeps = 60;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_hermitian(const ComplexMatrix& h) {
  const double scale = std::max(1.0, frobenius_norm(h));
  const double defect = hermitian_defect(h);
  if (defect > 1e-12 * scale) {
    throw Error(ErrorCode::NotHermitian, "||H - H*||_F = " + std::to_string(defect));
  }
}

double off_diagonal_norm(const std::vector<cplx>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) s += std::norm(a[i * n + j]);
    }
  }
  return std::sqrt(s);
}

}  // namespace

std::vector<cplx> HermitianEigen::vector(std::size_t k) const {
  const std::size_t n = vectors.n();
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = vectors(i, k);
  return v;
}

HermitianEigen herm_eig(const ComplexMatrix& h) {
  require_hermitian(h);
  const std::size_t n = h.n();
  const auto& k = kernels::active();

  const ComplexMatrix sym = hermitian_part(h);
  std::vector<cplx> a(sym.data().begin(), sym.data().end());
  // Rows of vt are the eigenvectors, so every update is a contiguous row op.
  std::vector<cplx> vt(n * n, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) vt[i * n + i] = 1.0;

  const double target = 1e-13 * frobenius_norm(sym);
  int sweep = 0;
  while (sweep < kMaxSweeps && off_diagonal_norm(a, n) > target) {
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx b = a[p * n + q];
        const double mag = std::abs(b);
        if (mag == 0.0) continue;
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        // Real Jacobi on [[app, |b|], [|b|, aqq]], conjugated by the phase of b.
        const double zeta = (aqq - app) / (2.0 * mag);
        double t;
        if (std::abs(zeta) > 1e150) {
          t = 0.5 / zeta;
        } else {
          t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx sigma = s * (b / mag);

        // rows p, q of J* A
        k.rotate_pair(n, &a[p * n], &a[q * n], c, sigma);
        // columns follow from Hermitian symmetry
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          a[i * n + p] = std::conj(a[p * n + i]);
          a[i * n + q] = std::conj(a[q * n + i]);
        }
        a[p * n + p] = app - t * mag;
        a[q * n + q] = aqq + t * mag;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        // V <- V J, i.e. rows of V^T rotate with conj(sigma)
        k.rotate_pair(n, &vt[p * n], &vt[q * n], c, std::conj(sigma));
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x].real() < a[y * n + y].real(); });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n), sweep};
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.values[col] = a[src * n + src].real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, col) = vt[src * n + i];
  }
  return out;
}

TopEigenpair top_eigenpair(const ComplexMatrix& h) {
  HermitianEigen e = herm_eig(h);
  const std::size_t last = h.n() - 1;
  return {e.values[last], e.vector(last)};
}

namespace {

ComplexMatrix reconstruct(const HermitianEigen& eig, const std::vector<double>& f) {
  const std::size_t n = eig.vectors.n();
  // V diag(f) V*, with exactly Hermitian output
  ComplexMatrix scaled(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = eig.vectors(i, j) * f[j];
  }
  return hermitian_part(scaled * adjoint(eig.vectors));
}

}  // namespace

ComplexMatrix herm_fn(const ComplexMatrix& h, const std::function<double(double)>& fn, SpectrumDomain domain) {
  HermitianEigen eig = herm_eig(h);
  std::vector<double> f(eig.values.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    double lam = eig.values[i];
    if (domain == SpectrumDomain::NonNegative) {
      if (lam < -1e-10) {
        throw Error(ErrorCode::DomainError, "eigenvalue " + std::to_string(lam) + " below -1e-10");
      }
      lam = std::max(lam, 0.0);
    }
    f[i] = fn(lam);
    if (!std::isfinite(f[i])) throw Error(ErrorCode::DomainError, "function not finite on spectrum");
  }
  return reconstruct(eig, f);
}

ComplexMatrix psd_power(const HermitianEigen& eig, double exponent) {
  const std::size_t n = eig.values.size();
  const double top = std::max(0.0, eig.values.back());
  const double floor = 64.0 * static_cast<double>(n) * kEps * top;
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double lam = eig.values[i];
    if (lam < -1e-10 * std::max(1.0, top)) {
      throw Error(ErrorCode::DomainError, "matrix is not positive semidefinite (eigenvalue " +
                                              std::to_string(lam) + ")");
    }
    if (exponent == 0.0) {
      f[i] = 1.0;
    } else if (lam <= floor) {
      f[i] = 0.0;
    } else {
      f[i] = std::pow(lam, exponent);
    }
  }
  return reconstruct(eig, f);
}

ComplexMatrix psd_power(const ComplexMatrix& h, double exponent) { return psd_power(herm_eig(h), exponent); }

ComplexMatrix abs_op(const ComplexMatrix& a) { return psd_power(adjoint(a) * a, 0.5); }

double op_norm(const ComplexMatrix& a) {
  const auto eig = herm_eig(hermitian_part(adjoint(a) * a));
  return std::sqrt(std::max(0.0, eig.values.back()));
}

bool is_psd(const ComplexMatrix& h, double tol) {
  const auto eig = herm_eig(h);
  return eig.values.front() >= -tol;
}

}  // namespace numrad
