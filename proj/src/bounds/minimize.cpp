#include <algorithm>
#include <cmath>
#include <numbers>

#include "numrad/bounds.hpp"

namespace numrad {

RatioMinimum minimize_ratio(const std::function<double(double)>& objective) {
  constexpr double kLo = -12.0, kHi = 12.0, kTol = 1e-8;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = kLo, b = kHi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = objective(std::exp(c));
  double fd = objective(std::exp(d));
  while (b - a > kTol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = objective(std::exp(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = objective(std::exp(d));
    }
  }
  const double s = fc <= fd ? c : d;
  return {std::exp(s), std::min(fc, fd)};
}

RatioBound min_weighted_euclid(RangeHull& hull, const RadiusOptions& opt) {
  // sqrt(ab/2) w_e(X/a, Y/b) depends only on rho = a/b; take b = 1.
  RadiusOptions search = opt;
  search.rel_tol = std::max(opt.rel_tol, 1e-8);
  const RatioMinimum m = minimize_ratio([&](double rho) {
    return std::sqrt(0.5 * rho) * hull_radius(hull, Gauge{2.0, rho, 1.0}, search).value;
  });
  const RadiusEstimate r = hull_radius(hull, Gauge{2.0, m.rho, 1.0}, opt);
  const double s = std::sqrt(0.5 * m.rho);
  return {m.rho, s * Quantity::of(r)};
}

}  // namespace numrad
