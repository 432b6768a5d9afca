#include <cmath>

#include "numrad/error.hpp"
#include "numrad/radii.hpp"
#include "radii_internal.hpp"

namespace numrad {

RadiusEstimate p_num_radius(const ComplexMatrix& a, const ComplexMatrix& b, double p, const RadiusOptions& opt) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error(ErrorCode::InvalidP, "p must be a finite value >= 1");
  require_same_dimension(a, b, "p_num_radius");
  if (p == 2.0) return euclid_radius(a, b, opt);
  if (opt.structure_shortcuts) {
    if (detail::is_zero(b)) return num_radius(a, opt);
    if (detail::is_zero(a)) return num_radius(b, opt);
  }
  const Gauge g{p, 1.0, 1.0};
  if (auto skew = detail::near_hermitian_pair(a, b)) {
    RangeHull hull(a, b);
    RadiusEstimate r = hull_radius(hull, g, opt);
    const double exact = wp_functional(a, b, p, r.witness);
    r.lower_cert = std::min(r.lower_cert, exact);
    r.value = r.lower_cert;
    r.upper_cert = std::max(*r.upper_cert + g(skew->first, skew->second), r.lower_cert);
    return r;
  }

  // one start from the Euclidean optimum
  RadiusOptions coarse = opt;
  coarse.max_cells = 600;
  const RadiusEstimate e2 = euclid_radius(a, b, coarse);
  detail::Candidate c = detail::pair_ascent_multistart(a, b, p, 2 * opt.restarts, "p_num_radius", {e2.witness});
  RadiusEstimate r;
  r.value = c.value;
  r.lower_cert = c.value;
  r.witness = std::move(c.x);
  r.method = RadiusMethod::projected_ascent;
  return r;
}

}  // namespace numrad
