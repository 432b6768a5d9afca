#include "numrad/complex_matrix.hpp"

#include <cmath>
#include <string>

#include "numrad/error.hpp"
#include "numrad/kernels.hpp"

namespace numrad {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidP: return "InvalidP";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::UnknownBoundId: return "UnknownBoundId";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

void check_dimension(std::size_t n) {
  if (n == 0 || n > kMaxDimension) {
    throw Error(ErrorCode::InvalidMatrix,
                "dimension " + std::to_string(n) + " outside [1, " + std::to_string(kMaxDimension) + "]");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n) {
  check_dimension(n);
  data_.assign(n * n, cplx(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<cplx> row_major) : n_(n), data_(std::move(row_major)) {
  check_dimension(n);
  if (data_.size() != n * n) {
    throw Error(ErrorCode::InvalidMatrix, "expected " + std::to_string(n * n) + " entries, got " +
                                              std::to_string(data_.size()));
  }
  if (!all_finite()) throw Error(ErrorCode::InvalidMatrix, "non-finite entry");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : n_(rows.size()) {
  check_dimension(n_);
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error(ErrorCode::InvalidMatrix, "matrix must be square");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw Error(ErrorCode::InvalidMatrix, "non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  if (!m.all_finite()) throw Error(ErrorCode::InvalidMatrix, "non-finite entry");
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  if (!m.all_finite()) throw Error(ErrorCode::InvalidMatrix, "non-finite entry");
  return m;
}

bool ComplexMatrix::all_finite() const noexcept {
  for (const cplx& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dimension(*this, other, "+");
  kernels::active().axpby(data_.size(), 1.0, data_.data(), 1.0, other.data_.data(), data_.data());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dimension(*this, other, "-");
  kernels::active().axpby(data_.size(), 1.0, data_.data(), -1.0, other.data_.data(), data_.data());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dimension(a, b, "*");
  ComplexMatrix c(a.n());
  kernels::active().gemm(a.n(), a.data().data(), b.data().data(), c.data().data());
  return c;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.n();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r(j, i) = std::conj(a(i, j));
  }
  return r;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  const std::size_t n = a.n();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      r(i, j) = v;
      r(j, i) = std::conj(v);
    }
  }
  return r;
}

CartesianParts cartesian(const ComplexMatrix& a) {
  // Im(A) = (A - A*)/(2i) = Re(-i A)
  return {hermitian_part(a), hermitian_part(cplx(0.0, -1.0) * a)};
}

std::vector<cplx> matvec(const ComplexMatrix& a, std::span<const cplx> x) {
  std::vector<cplx> y(a.n());
  kernels::active().gemv(a.n(), a.data().data(), x.data(), y.data());
  return y;
}

cplx quadratic_form(const ComplexMatrix& a, std::span<const cplx> x) {
  const auto ax = matvec(a, x);
  return kernels::active().dot(a.n(), ax.data(), x.data());
}

cplx inner(std::span<const cplx> x, std::span<const cplx> y) {
  return kernels::active().dot(x.size(), x.data(), y.data());
}

double vec_norm(std::span<const cplx> x) {
  double s = 0.0;
  for (const cplx& z : x) s += std::norm(z);
  return std::sqrt(s);
}

double frobenius_norm(const ComplexMatrix& a) { return vec_norm(a.data()); }

cplx trace(const ComplexMatrix& a) {
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i) t += a(i, i);
  return t;
}

double hermitian_defect(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
  }
  return std::sqrt(s);
}

bool is_upper_triangular(const ComplexMatrix& a) {
  for (std::size_t i = 1; i < a.n(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (a(i, j) != cplx(0.0, 0.0)) return false;
    }
  }
  return true;
}

bool is_lower_triangular(const ComplexMatrix& a) {
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = i + 1; j < a.n(); ++j) {
      if (a(i, j) != cplx(0.0, 0.0)) return false;
    }
  }
  return true;
}

void require_same_dimension(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.n() != b.n()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(op) + ": " + std::to_string(a.n()) + " vs " +
                                                  std::to_string(b.n()));
  }
}

}  // namespace numrad
