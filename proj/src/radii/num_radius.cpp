#include <algorithm>
#include <cmath>
#include <limits>

#include "numrad/hermitian.hpp"
#include "numrad/radii.hpp"

namespace numrad {

std::string_view to_string(RadiusMethod m) noexcept {
  switch (m) {
    case RadiusMethod::theta_sweep: return "theta_sweep";
    case RadiusMethod::reduction: return "reduction";
    case RadiusMethod::projected_ascent: return "projected_ascent";
    case RadiusMethod::sphere_grid: return "sphere_grid";
    case RadiusMethod::power_gelfand: return "power_gelfand";
    case RadiusMethod::hermitian_eigen: return "hermitian_eigen";
  }
  return "unknown";
}

double RadiusEstimate::width() const noexcept {
  if (!upper_cert) return std::numeric_limits<double>::infinity();
  return std::max(0.0, *upper_cert - lower_cert);
}

double w_functional(const ComplexMatrix& a, std::span<const cplx> x) { return std::abs(quadratic_form(a, x)); }

double we_functional(const ComplexMatrix& a, const ComplexMatrix& b, std::span<const cplx> x) {
  return std::hypot(std::abs(quadratic_form(a, x)), std::abs(quadratic_form(b, x)));
}

double wp_functional(const ComplexMatrix& a, const ComplexMatrix& b, double p, std::span<const cplx> x) {
  const Gauge g{p, 1.0, 1.0};
  return g(std::abs(quadratic_form(a, x)), std::abs(quadratic_form(b, x)));
}

double euclid_norm_functional(const ComplexMatrix& a, const ComplexMatrix& b, std::span<const cplx> x) {
  const auto ax = matvec(a, x);
  const auto bx = matvec(b, x);
  // largest eigenvalue of the 2x2 Gram matrix of [Ax, Bx]
  const double p = std::norm(vec_norm(ax));
  const double q = std::norm(vec_norm(bx));
  const double c = std::norm(inner(bx, ax));
  const double mid = 0.5 * (p + q);
  const double rad = std::sqrt(0.25 * (p - q) * (p - q) + c);
  return std::sqrt(std::max(0.0, mid + rad));
}

RadiusEstimate hull_radius(RangeHull& hull, const Gauge& g, const RadiusOptions& opt) {
  const RangeHull::Enclosure e = hull.maximize(g, opt.rel_tol, opt.max_directions);
  RadiusEstimate r;
  r.value = e.lower;
  r.lower_cert = e.lower;
  r.upper_cert = e.upper;
  r.witness = e.witness;
  r.method = RadiusMethod::theta_sweep;
  return r;
}

RadiusEstimate num_radius(const ComplexMatrix& a, const RadiusOptions& opt) {
  const CartesianParts parts = cartesian(a);
  RangeHull hull(parts.re, parts.im);
  RadiusEstimate r = hull_radius(hull, Gauge{}, opt);
  r.lower_cert = std::min(r.lower_cert, w_functional(a, r.witness));
  r.value = r.lower_cert;
  r.upper_cert = std::max(*r.upper_cert, r.lower_cert);
  return r;
}

}  // namespace numrad
