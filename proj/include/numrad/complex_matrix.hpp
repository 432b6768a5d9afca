#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace numrad {

using cplx = std::complex<double>;

/// Largest dimension accepted by ComplexMatrix.
inline constexpr std::size_t kMaxDimension = 64;

/// Dense square complex matrix stored row-major.
///
/// Construction validates the invariants (1 <= n <= kMaxDimension, finite
/// entries). Element access through the non-const operator() is unchecked.
class ComplexMatrix {
 public:
  /// Zero matrix of dimension n.
  explicit ComplexMatrix(std::size_t n);
  ComplexMatrix(std::size_t n, std::vector<cplx> row_major);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> d);
  static ComplexMatrix diagonal(std::span<const double> d);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return data_.size(); }

  const cplx& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  cplx& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }

  std::span<const cplx> data() const noexcept { return data_; }
  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }
  std::span<cplx> row(std::size_t i) noexcept { return {data_.data() + i * n_, n_}; }

  bool all_finite() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx s);

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Real and imaginary parts of the Cartesian decomposition A = Re + i Im.
struct CartesianParts {
  ComplexMatrix re;
  ComplexMatrix im;
};
CartesianParts cartesian(const ComplexMatrix& a);

/// (A + A*)/2 with the diagonal forced real.
ComplexMatrix hermitian_part(const ComplexMatrix& a);

std::vector<cplx> matvec(const ComplexMatrix& a, std::span<const cplx> x);
/// <Ax, x> = x* A x.
cplx quadratic_form(const ComplexMatrix& a, std::span<const cplx> x);
/// <x, y> with the convention sum conj(y_i) x_i, i.e. linear in x.
cplx inner(std::span<const cplx> x, std::span<const cplx> y);
double vec_norm(std::span<const cplx> x);

double frobenius_norm(const ComplexMatrix& a);
cplx trace(const ComplexMatrix& a);
/// Frobenius norm of A - A*.
double hermitian_defect(const ComplexMatrix& a);
bool is_upper_triangular(const ComplexMatrix& a);
bool is_lower_triangular(const ComplexMatrix& a);

/// Throws DimensionMismatch unless both operands share a dimension.
void require_same_dimension(const ComplexMatrix& a, const ComplexMatrix& b, const char* op);

}  // namespace numrad
