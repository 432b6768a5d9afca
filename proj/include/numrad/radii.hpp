#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "numrad/complex_matrix.hpp"
#include "numrad/range_hull.hpp"

namespace numrad {

enum class RadiusMethod { theta_sweep, reduction, projected_ascent, sphere_grid, power_gelfand, hermitian_eigen };

std::string_view to_string(RadiusMethod m) noexcept;

/// A computed radius with its enclosure. upper_cert is absent when only a
/// heuristic optimizer was available.
struct RadiusEstimate {
  double value = 0.0;
  double lower_cert = 0.0;
  std::optional<double> upper_cert;
  std::vector<cplx> witness;
  RadiusMethod method = RadiusMethod::theta_sweep;

  /// upper_cert - lower_cert, or +inf without an upper certificate.
  double width() const noexcept;
  double upper_or_value() const noexcept { return upper_cert.value_or(value); }
};

struct RadiusOptions {
  /// Relative gap at which refinement stops.
  double rel_tol = 1e-11;
  /// Direction budget for a single range hull.
  std::size_t max_directions = 4096;
  /// Cell budget for the two-parameter searches.
  std::size_t max_cells = 4000;
  /// Take exact reductions such as w_e(A, A*) = sqrt(2) w(A). Disabled in
  /// tests that exercise the general path.
  bool structure_shortcuts = true;
  int restarts = 16;
};

/// w(A) = sup |<Ax,x>|.
RadiusEstimate num_radius(const ComplexMatrix& a, const RadiusOptions& opt = {});

/// Maximum of a gauge over the joint range of a Hermitian pair, reusing hull.
RadiusEstimate hull_radius(RangeHull& hull, const Gauge& g, const RadiusOptions& opt = {});

/// r(B), the largest eigenvalue modulus.
RadiusEstimate spectral_radius(const ComplexMatrix& b);

/// w_e(A,B) = sup sqrt(|<Ax,x>|^2 + |<Bx,x>|^2).
RadiusEstimate euclid_radius(const ComplexMatrix& a, const ComplexMatrix& b, const RadiusOptions& opt = {});

/// ||A,B||_e = sup over unit x, y of sqrt(|<Ax,y>|^2 + |<Bx,y>|^2).
RadiusEstimate euclid_norm(const ComplexMatrix& a, const ComplexMatrix& b, const RadiusOptions& opt = {});

/// w_p(A,B) = sup (|<Ax,x>|^p + |<Bx,x>|^p)^(1/p), p >= 1.
RadiusEstimate p_num_radius(const ComplexMatrix& a, const ComplexMatrix& b, double p,
                            const RadiusOptions& opt = {});

/// Defining functionals, evaluated at a unit vector.
double w_functional(const ComplexMatrix& a, std::span<const cplx> x);
double we_functional(const ComplexMatrix& a, const ComplexMatrix& b, std::span<const cplx> x);
double wp_functional(const ComplexMatrix& a, const ComplexMatrix& b, double p, std::span<const cplx> x);
/// sup over unit y of the Euclidean-norm functional: sigma_max of [Ax, Bx].
double euclid_norm_functional(const ComplexMatrix& a, const ComplexMatrix& b, std::span<const cplx> x);

/// Objective for the brute-force sphere grid.
struct SphereObjective {
  enum class Kind { numerical_radius, euclid_radius, p_radius, constant };

  Kind kind = Kind::constant;
  std::optional<ComplexMatrix> a;
  std::optional<ComplexMatrix> b;
  double p = 2.0;
  double constant = 0.0;

  static SphereObjective w(const ComplexMatrix& a);
  static SphereObjective we(const ComplexMatrix& a, const ComplexMatrix& b);
  static SphereObjective wp(const ComplexMatrix& a, const ComplexMatrix& b, double p);
  static SphereObjective constant_value(double c);

  double operator()(std::span<const cplx> x) const;
  /// Lipschitz constant on the unit sphere with respect to |x - y|.
  double lipschitz() const;
};

/// Exhaustive grid over the unit sphere of C^n (global phase fixed, 2n-2
/// angles, `resolution` points per angle). upper_cert = best + L * reach,
/// where reach bounds the distance from any unit vector to the grid.
RadiusEstimate sphere_oracle(const SphereObjective& f, std::size_t n, std::size_t resolution);

}  // namespace numrad
