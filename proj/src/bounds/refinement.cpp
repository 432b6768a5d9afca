#include <algorithm>
#include <cmath>
#include <numbers>

#include "numrad/bounds.hpp"
#include "numrad/hermitian.hpp"

namespace numrad {
namespace {

constexpr double kDegenerate = 1e-12;
const cplx kI(0.0, 1.0);

// (2 - || x/|x| + c y/|y| ||) * min(|x|, |y|)^k with operator norms, where
// the normalized operands are x^k / |x|^k.
RefinementTerm maligranda(const ComplexMatrix& x, const ComplexMatrix& y, double nx, double ny, int k, cplx c,
                          double scale) {
  if (nx < kDegenerate || ny < kDegenerate) return {0.0, true};
  ComplexMatrix xs = k == 1 ? x : x * x;
  ComplexMatrix ys = k == 1 ? y : y * y;
  const double px = k == 1 ? nx : nx * nx;
  const double py = k == 1 ? ny : ny * ny;
  xs *= 1.0 / px;
  ys *= c / py;
  const double angle = op_norm(xs + ys);
  return {scale * (2.0 - angle) * std::min(px, py), false};
}

}  // namespace

RefinementTerms refinement_terms(const ComplexMatrix& a) {
  const CartesianParts parts = cartesian(a);
  const ComplexMatrix p = parts.re + parts.im;
  const ComplexMatrix q = parts.re - parts.im;
  const double np = op_norm(p);
  const double nq = op_norm(q);
  const double nr = op_norm(parts.re);
  const double ni = op_norm(parts.im);

  RefinementTerms t;
  t.mu = maligranda(p, q, np, nq, 1, kI, 0.5 / std::numbers::sqrt2);
  t.nu = maligranda(p, q, np, nq, 2, kI, 0.25);
  t.nu_plain = maligranda(p, q, np, nq, 2, 1.0, 0.25);
  t.gamma = maligranda(parts.re, parts.im, nr, ni, 1, kI, 0.5);
  t.delta = maligranda(parts.re, parts.im, nr, ni, 2, kI, 0.5);
  t.delta_plain = maligranda(parts.re, parts.im, nr, ni, 2, 1.0, 0.5);
  t.mu_hat = std::abs(np - nq);
  return t;
}

EqualityReport equality_condition_check(const ComplexMatrix& a) {
  EqualityReport r;
  const RadiusEstimate w = num_radius(a);
  const double na = op_norm(a);
  r.w = w.value;
  r.half_norm = 0.5 * na;
  const CartesianParts parts = cartesian(a);
  const ComplexMatrix p = parts.re + parts.im;
  const ComplexMatrix q = parts.re - parts.im;
  r.norm_re_plus_im = op_norm(p);
  r.norm_re_minus_im = op_norm(q);
  r.expected = na / std::numbers::sqrt2;

  auto expr = [](const ComplexMatrix& x, const ComplexMatrix& y) {
    const double nx = op_norm(x);
    const double ny = op_norm(y);
    if (nx < kDegenerate || ny < kDegenerate) return std::nan("");
    ComplexMatrix xs = x * x;
    ComplexMatrix ys = y * y;
    xs *= 1.0 / (nx * nx);
    ys *= kI / (ny * ny);
    return op_norm(xs + ys);
  };
  r.commutator_expr_nu = expr(p, q);
  r.commutator_expr_delta = expr(parts.re, parts.im);

  r.applicable = std::abs(r.w - r.half_norm) <= 1e-8;
  if (r.applicable) {
    r.holds = std::abs(r.norm_re_plus_im - r.expected) <= 1e-6 && std::abs(r.norm_re_minus_im - r.expected) <= 1e-6;
  }
  return r;
}

}  // namespace numrad
