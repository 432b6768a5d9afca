#pragma once

#include <functional>
#include <vector>

#include "numrad/complex_matrix.hpp"

namespace numrad {

/// Eigen-decomposition H = V diag(values) V* of a Hermitian matrix.
struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< unitary; column k pairs with values[k]
  int sweeps = 0;

  std::vector<cplx> vector(std::size_t k) const;
};

/// Cyclic complex Jacobi. Throws NotHermitian when
/// ||H - H*||_F > 1e-12 max(1, ||H||_F).
HermitianEigen herm_eig(const ComplexMatrix& h);

/// Largest eigenvalue with its unit eigenvector.
struct TopEigenpair {
  double value = 0.0;
  std::vector<cplx> vector;
};
TopEigenpair top_eigenpair(const ComplexMatrix& h);

enum class SpectrumDomain {
  Real,         ///< fn accepts any real argument
  NonNegative,  ///< fn needs t >= 0; eigenvalues in [-1e-10, 0) are clipped
};

/// V diag(fn(lambda)) V*, returned exactly Hermitian.
ComplexMatrix herm_fn(const ComplexMatrix& h, const std::function<double(double)>& fn,
                      SpectrumDomain domain = SpectrumDomain::Real);

/// H^s for positive semidefinite H. Uses 0^0 = 1, so H^0 = I. Eigenvalues
/// below the roundoff floor 64 n eps lambda_max are treated as zero.
ComplexMatrix psd_power(const ComplexMatrix& h, double exponent);
/// Same, reusing a decomposition.
ComplexMatrix psd_power(const HermitianEigen& eig, double exponent);

/// |A| = (A* A)^(1/2).
ComplexMatrix abs_op(const ComplexMatrix& a);

/// Largest singular value.
double op_norm(const ComplexMatrix& a);

/// True iff the smallest eigenvalue is >= -tol. Throws NotHermitian.
bool is_psd(const ComplexMatrix& h, double tol);

}  // namespace numrad
