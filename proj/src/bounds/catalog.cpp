#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "numrad/bounds.hpp"
#include "numrad/error.hpp"
#include "numrad/hermitian.hpp"

namespace numrad {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

using Evaluator = void (*)(const Params&, EvalContext&, BoundResult&);

struct Entry {
  BoundSpec spec;
  Evaluator eval;
};

std::string key(const char* prefix, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s:%.17g", prefix, v);
  return buf;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = lo + (hi - lo) * i / (count - 1);
  return v;
}

ParamSchema unit_param(const char* name) {
  return {name, 0.0, 1.0, false, {}, {0.0, 0.25, 0.5, 0.75, 1.0}, linspace(0.0, 1.0, 17)};
}

ParamSchema p_param() { return {"p", 1.0, 64.0, false, {}, {1.0, 2.0, 3.0, 5.0}, linspace(1.0, 5.0, 17)}; }

double param(const Params& params, const char* name) { return params.at(name); }

void not_applicable(BoundResult& r, const char* why) {
  r.applicable = false;
  r.note = why;
}

// ---- shared derived quantities ------------------------------------------

ComplexMatrix half_sum(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix s = x + y;
  s *= 0.5;
  return hermitian_part(s);
}

ComplexMatrix make_m(EvalContext& ctx, double a) { return half_sum(ctx.abs_pow(2.0 * a), ctx.abs_star_pow(2.0 * (1.0 - a))); }
ComplexMatrix make_n(EvalContext& ctx, double a) { return half_sum(ctx.abs_star_pow(2.0 * a), ctx.abs_pow(2.0 * (1.0 - a))); }

Quantity w_a_squared(EvalContext& ctx) {
  return Quantity::of(ctx.w_of("A^2", [&] { return ctx.a() * ctx.a(); }));
}

// Hull of (|A|^{2t}, |A*|^{2(1-t)}).
RangeHull& modulus_hull(EvalContext& ctx, double t) {
  return ctx.hull(key("modulus", t), [&] {
    return std::make_pair(ctx.abs_pow(2.0 * t), ctx.abs_star_pow(2.0 * (1.0 - t)));
  });
}

Quantity hull_max(EvalContext& ctx, RangeHull& hull, const Gauge& g) {
  return Quantity::of(hull_radius(hull, g, ctx.options()));
}

// ---- lower bounds --------------------------------------------------------

void eval_l1(const Params&, EvalContext& ctx, BoundResult& r) { r.value = 0.5 * ctx.norm_a(); }
void eval_l2(const Params&, EvalContext& ctx, BoundResult& r) { r.value = 0.25 * ctx.norm_s(); }

void eval_l3(const Params&, EvalContext& ctx, BoundResult& r) {
  const auto& t = ctx.terms();
  r.value = 0.5 * ctx.norm_a() + Quantity::rounded(t.mu.value, 1e-10);
  if (t.mu.degenerate) r.note = "degenerate: Re(A) +- Im(A) vanishes";
}

void eval_l4(const Params&, EvalContext& ctx, BoundResult& r) {
  const auto& t = ctx.terms();
  r.value = 0.25 * ctx.norm_s() + Quantity::rounded(t.nu.value, 1e-10);
  if (t.nu.degenerate) r.note = "degenerate: Re(A) +- Im(A) vanishes";
}

void eval_l4r(const Params&, EvalContext& ctx, BoundResult& r) {
  const auto& t = ctx.terms();
  r.value = 0.25 * ctx.norm_s() + Quantity::rounded(t.nu_plain.value, 1e-10);
  if (t.nu_plain.degenerate) r.note = "degenerate: Re(A) +- Im(A) vanishes";
}

void eval_l5(const Params&, EvalContext& ctx, BoundResult& r) {
  const auto& t = ctx.terms();
  r.value = 0.5 * ctx.norm_a() + Quantity::rounded(t.gamma.value, 1e-10);
  if (t.gamma.degenerate) r.note = "degenerate: Re(A) or Im(A) vanishes";
}

void eval_l6(const Params&, EvalContext& ctx, BoundResult& r) {
  const auto& t = ctx.terms();
  r.value = 0.25 * ctx.norm_s() + Quantity::rounded(t.delta.value, 1e-10);
  if (t.delta.degenerate) r.note = "degenerate: Re(A) or Im(A) vanishes";
}

void eval_l6r(const Params&, EvalContext& ctx, BoundResult& r) {
  const auto& t = ctx.terms();
  r.value = 0.25 * ctx.norm_s() + Quantity::rounded(t.delta_plain.value, 1e-10);
  if (t.delta_plain.degenerate) r.note = "degenerate: Re(A) or Im(A) vanishes";
}

void eval_l7(const Params&, EvalContext& ctx, BoundResult& r) {
  const auto& t = ctx.terms();
  const CartesianParts parts = cartesian(ctx.a());
  const double m = std::max(op_norm(parts.re), op_norm(parts.im));
  r.value = 0.25 * ctx.norm_s() + Quantity::rounded(0.5 * t.mu_hat * m, 1e-10);
}

// ---- upper bounds on w and w^2 -------------------------------------------

void eval_u1(const Params&, EvalContext& ctx, BoundResult& r) { r.value = ctx.norm_a(); }

void eval_u2(const Params&, EvalContext& ctx, BoundResult& r) {
  r.value = 0.5 * ctx.norm_of("|A|+|A*|", [&] { return ctx.abs_pow(1.0) + ctx.abs_star_pow(1.0); });
}

void eval_u3(const Params&, EvalContext& ctx, BoundResult& r) { r.value = 0.5 * ctx.norm_s(); }

void eval_u4(const Params&, EvalContext& ctx, BoundResult& r) {
  const Quantity na = ctx.norm_a();
  r.value = 0.5 * w_a_squared(ctx) + 0.5 * (na * na);
}

void eval_u5(const Params&, EvalContext& ctx, BoundResult& r) {
  r.value = 0.5 * w_a_squared(ctx) + 0.25 * ctx.norm_s();
}

void eval_u6(const Params&, EvalContext& ctx, BoundResult& r) {
  const Quantity w = Quantity::of(ctx.w_of("|A||A*|", [&] { return ctx.abs_pow(1.0) * ctx.abs_star_pow(1.0); }));
  r.value = 0.5 * w + 0.25 * ctx.norm_s();
}

void eval_u7(const Params& p, EvalContext& ctx, BoundResult& r) {
  const double a = param(p, "alpha");
  const ComplexMatrix m = make_m(ctx, a);
  const Quantity w = Quantity::of(ctx.w_of(key("A*M", a), [&] { return ctx.a() * m; }));
  const Quantity nn = ctx.norm_of(key("|A*|^2+M^2", a), [&] { return ctx.abs_star_pow(2.0) + m * m; });
  r.value = 0.5 * w + 0.25 * nn;
}

void eval_u8(const Params& p, EvalContext& ctx, BoundResult& r) {
  const double a = param(p, "alpha");
  const ComplexMatrix nm = make_n(ctx, a);
  const Quantity w = Quantity::of(ctx.w_of(key("N*A", a), [&] { return nm * ctx.a(); }));
  const Quantity nn = ctx.norm_of(key("|A|^2+N^2", a), [&] { return ctx.abs_pow(2.0) + nm * nm; });
  r.value = 0.5 * w + 0.25 * nn;
}

void eval_u9(const Params&, EvalContext& ctx, BoundResult& r) {
  const ComplexMatrix m = make_m(ctx, 0.5);
  const Quantity x = ctx.norm_of("|A|^2+M^2", [&] { return ctx.abs_pow(2.0) + m * m; });
  const Quantity y = ctx.norm_of("|A*|^2+M^2", [&] { return ctx.abs_star_pow(2.0) + m * m; });
  r.value = 0.5 * qmin(x, y);
}

void eval_u10a(const Params& p, EvalContext& ctx, BoundResult& r) {
  const double a = param(p, "alpha");
  const ComplexMatrix m = make_m(ctx, a);
  const Quantity w = Quantity::of(ctx.w_of(key("A*M", a), [&] { return ctx.a() * m; }));
  const Quantity nm = ctx.norm_of(key("M", a), [&] { return m; });
  r.value = 0.5 * w + 0.5 * (ctx.norm_a() * nm);
}

void eval_u10b(const Params& p, EvalContext& ctx, BoundResult& r) {
  const double a = param(p, "alpha");
  const ComplexMatrix nmat = make_n(ctx, a);
  const Quantity w = Quantity::of(ctx.w_of(key("N*A", a), [&] { return nmat * ctx.a(); }));
  const Quantity nn = ctx.norm_of(key("N", a), [&] { return nmat; });
  r.value = 0.5 * w + 0.5 * (ctx.norm_a() * nn);
}

void eval_u10min(const Params&, EvalContext& ctx, BoundResult& r) {
  const ComplexMatrix m = make_m(ctx, 0.5);
  const Quantity w1 = Quantity::of(ctx.w_of(key("A*M", 0.5), [&] { return ctx.a() * m; }));
  const Quantity w2 = Quantity::of(ctx.w_of(key("N*A", 0.5), [&] { return m * ctx.a(); }));
  const Quantity nm = ctx.norm_of(key("M", 0.5), [&] { return m; });
  r.value = 0.5 * qmin(w1, w2) + 0.5 * (ctx.norm_a() * nm);
}

void eval_u11(const Params&, EvalContext& ctx, BoundResult& r) {
  const Quantity e = Quantity::of(ctx.radius("||A,A*||_e", [&] { return euclid_norm(ctx.a(), ctx.a_star(), ctx.options()); }));
  r.value = 0.25 * w_a_squared(ctx) + 0.25 * (e * e) + 0.125 * ctx.norm_s();
}

void eval_u12(const Params&, EvalContext& ctx, BoundResult& r) {
  const Quantity e = Quantity::of(ctx.radius("w_e(A,A*)", [&] { return euclid_radius(ctx.a(), ctx.a_star(), ctx.options()); }));
  r.value = 0.25 * w_a_squared(ctx) + 0.25 * (e * e) + 0.125 * ctx.norm_s();
}

void eval_u13(const Params& p, EvalContext& ctx, BoundResult& r) {
  const double t = param(p, "t");
  // The minimum over the weight ratio is symmetric in the two operands, so
  // the hull of (|A|^{2t}, |A*|^{2(1-t)}) serves as well.
  const RatioBound b = min_weighted_euclid(modulus_hull(ctx, t), ctx.options());
  r.value = b.value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "ratio=%.6g", b.rho);
  r.note = buf;
}

void eval_u14(const Params& p, EvalContext& ctx, BoundResult& r) {
  const double t = param(p, "t");
  r.value = (1.0 / kSqrt2) * hull_max(ctx, modulus_hull(ctx, t), Gauge{});
}

void eval_u15(const Params& p, EvalContext& ctx, BoundResult& r) {
  const double pp = param(p, "p");
  r.value = std::pow(2.0, -1.0 / pp) * hull_max(ctx, modulus_hull(ctx, 0.5), Gauge{pp, 1.0, 1.0});
}

// ---- products, sums and commutators --------------------------------------

void eval_p1(const Params&, EvalContext& ctx, BoundResult& r) {
  const auto& ops = ctx.operands();
  if (!ops.b || !ops.c) return not_applicable(r, "needs operands B and C");
  const ComplexMatrix& b = *ops.b;
  const ComplexMatrix& c = *ops.c;
  r.target = Quantity::of(ctx.w_of("P1:BC", [&] { return b * c; }));
  RangeHull& hull = ctx.hull("P1:BB*,C*C", [&] {
    return std::make_pair(hermitian_part(b * adjoint(b)), hermitian_part(adjoint(c) * c));
  });
  const RatioBound m = min_weighted_euclid(hull, ctx.options());
  r.value = m.value;
}

void eval_p2(const Params& p, EvalContext& ctx, BoundResult& r) {
  const auto& ops = ctx.operands();
  if (!ops.b) return not_applicable(r, "needs operand B");
  const ComplexMatrix& b = *ops.b;
  const double t = param(p, "t");
  const ComplexMatrix& abs_a = ctx.abs_pow(1.0);
  const double defect = frobenius_norm(abs_a * b - adjoint(b) * abs_a);
  const double scale = std::max(1.0, ctx.norm_a().v * op_norm(b));
  r.target = Quantity::of(ctx.w_of("P2:AB", [&] { return ctx.a() * b; }));
  if (defect > 1e-8 * scale) return not_applicable(r, "|A|B != B*|A|");
  const Quantity rb = Quantity::of(ctx.radius("P2:r(B)", [&] { return spectral_radius(b); }));
  r.value = (1.0 / kSqrt2) * (rb * hull_max(ctx, modulus_hull(ctx, t), Gauge{}));
}

double h_apply(int h, double x) { return h == 1 ? x : x * x; }

void eval_p3(const Params& p, EvalContext& ctx, BoundResult& r) {
  const auto& ops = ctx.operands();
  if (!ops.block) return not_applicable(r, "needs a positive block [[P, C*], [C, Q]]");
  const PositiveBlock& blk = *ops.block;
  const int h = static_cast<int>(param(p, "h"));
  const double alpha = param(p, "alpha");
  const double beta = param(p, "beta");

  const RadiusEstimate& wc = ctx.w_of("P3:C", [&] { return blk.c; });
  r.target = {h_apply(h, wc.value), h_apply(h, wc.lower_cert), h_apply(h, wc.upper_cert.value_or(wc.value))};

  const std::size_t n = blk.p.n();
  ComplexMatrix big(2 * n);
  const ComplexMatrix cs = adjoint(blk.c);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      big(i, j) = blk.p(i, j);
      big(i, j + n) = cs(i, j);
      big(i + n, j) = blk.c(i, j);
      big(i + n, j + n) = blk.q(i, j);
    }
  }
  const double tol = 1e-10 * std::max(1.0, frobenius_norm(big));
  if (hermitian_defect(big) > 1e-12 * std::max(1.0, frobenius_norm(big)) || !is_psd(big, tol)) {
    return not_applicable(r, "block is not positive semidefinite");
  }
  RangeHull& hull = ctx.hull(key("P3:h", h), [&] {
    if (h == 1) return std::make_pair(hermitian_part(blk.p), hermitian_part(blk.q));
    return std::make_pair(hermitian_part(blk.p * blk.p), hermitian_part(blk.q * blk.q));
  });
  r.value = std::sqrt(0.5 * alpha * beta) * hull_max(ctx, hull, Gauge{2.0, alpha, beta});
}

void eval_p4(const Params& p, EvalContext& ctx, BoundResult& r) {
  const auto& terms = ctx.operands().terms;
  if (terms.empty()) return not_applicable(r, "needs product terms (A_i, X_i, B_i)");
  const double pp = param(p, "p");
  const double t = param(p, "t");
  const double m = static_cast<double>(terms.size());

  const RadiusEstimate& ws = ctx.w_of("P4:sum", [&] {
    ComplexMatrix s(ctx.a().n());
    for (const auto& term : terms) s += adjoint(term.a) * term.x * term.b;
    return s;
  });
  r.target = qpow(Quantity::of(ws), pp);

  Quantity sum = Quantity::exact(0.0);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const ProductTerm& term = terms[i];
    RangeHull& hull = ctx.hull(key(("P4:" + std::to_string(i)).c_str(), t), [&] {
      const ComplexMatrix fx = psd_power(hermitian_part(adjoint(term.x) * term.x), t);
      const ComplexMatrix gx = psd_power(hermitian_part(term.x * adjoint(term.x)), 1.0 - t);
      return std::make_pair(hermitian_part(adjoint(term.b) * fx * term.b),
                            hermitian_part(adjoint(term.a) * gx * term.a));
    });
    sum = sum + qpow(hull_max(ctx, hull, Gauge{pp, 1.0, 1.0}), pp);
  }
  r.value = (0.5 * std::pow(m, pp - 1.0)) * sum;
}

struct CommutatorData {
  Quantity scale;   // max(||XB||, ||BY||)
  Quantity target;  // max over signs of w(AXB +- BYA)
};

std::optional<CommutatorData> commutator_data(EvalContext& ctx, BoundResult& r) {
  const auto& ops = ctx.operands();
  if (!ops.b) {
    not_applicable(r, "needs operand B");
    return std::nullopt;
  }
  const std::size_t n = ctx.a().n();
  const ComplexMatrix x = ops.x.value_or(ComplexMatrix::identity(n));
  const ComplexMatrix y = ops.y.value_or(ComplexMatrix::identity(n));
  const ComplexMatrix& a = ctx.a();
  const ComplexMatrix& b = *ops.b;
  const Quantity s = qmax(ctx.norm_of("C:XB", [&] { return x * b; }), ctx.norm_of("C:BY", [&] { return b * y; }));
  const Quantity wp = Quantity::of(ctx.w_of("C:AXB+BYA", [&] { return a * x * b + b * y * a; }));
  const Quantity wm = Quantity::of(ctx.w_of("C:AXB-BYA", [&] { return a * x * b - b * y * a; }));
  return CommutatorData{s, qmax(wp, wm)};
}

void commutator_with(EvalContext& ctx, BoundResult& r, const Quantity& reduction) {
  auto d = commutator_data(ctx, r);
  if (!d) return;
  r.target = d->target;
  const Quantity w = ctx.w_q();
  r.value = (2.0 * kSqrt2) * (d->scale * qsqrt(w * w - reduction));
}

void eval_c0(const Params&, EvalContext& ctx, BoundResult& r) { commutator_with(ctx, r, Quantity::exact(0.0)); }
void eval_c1(const Params&, EvalContext& ctx, BoundResult& r) {
  commutator_with(ctx, r, Quantity::rounded(ctx.terms().nu.value, 1e-10));
}
void eval_c1r(const Params&, EvalContext& ctx, BoundResult& r) {
  commutator_with(ctx, r, Quantity::rounded(ctx.terms().nu_plain.value, 1e-10));
}
void eval_c2(const Params&, EvalContext& ctx, BoundResult& r) {
  commutator_with(ctx, r, Quantity::rounded(ctx.terms().delta.value, 1e-10));
}
void eval_c2r(const Params&, EvalContext& ctx, BoundResult& r) {
  commutator_with(ctx, r, Quantity::rounded(ctx.terms().delta_plain.value, 1e-10));
}

// ---- registry ------------------------------------------------------------

std::vector<Entry> build() {
  using S = BoundSide;
  const std::vector<ParamSchema> none;
  const std::vector<ParamSchema> alpha{unit_param("alpha")};
  const std::vector<ParamSchema> t{unit_param("t")};
  const std::vector<ParamSchema> p{p_param()};
  const std::vector<ParamSchema> pt{p_param(), unit_param("t")};
  const std::vector<ParamSchema> p3{
      {"h", 1.0, 2.0, false, {1.0, 2.0}, {1.0, 2.0}, {1.0, 2.0}},
      {"alpha", 0.0, 1e6, true, {}, {0.25, 0.5, 0.75, 1.0}, linspace(1.0 / 16.0, 1.0, 17)},
      {"beta", 0.0, 1e6, true, {}, {1.0}, {1.0}},
  };

  const char* tw = "w(A)";
  const char* tw2 = "w^2(A)";
  const char* always = "always";
  std::vector<Entry> e;
  auto add = [&](const char* id, S side, std::vector<ParamSchema> params, const char* operands, const char* formula,
                 const char* target, const char* applicability, const char* anchor, Evaluator fn) {
    e.push_back({BoundSpec{id, side, std::move(params), operands, formula, target, applicability, anchor}, fn});
  };

  add("L1", S::lower_w, none, "A", "||A||/2", tw, always, "classical lower bound; sharp when A^2 = 0", eval_l1);
  add("L2", S::lower_w2, none, "A", "||A*A + AA*||/4", tw2, always, "classical lower bound for w^2", eval_l2);
  add("L3", S::lower_w, none, "A", "||A||/2 + mu(A)", tw, "term is 0 when Re(A) +- Im(A) = 0",
      "Maligranda refinement of ||A||/2 <= w(A)", eval_l3);
  add("L4", S::lower_w2, none, "A", "||A*A + AA*||/4 + nu(A)", tw2, "term is 0 when Re(A) +- Im(A) = 0",
      "Maligranda refinement of ||A*A + AA*||/4 <= w^2(A), printed form", eval_l4);
  add("L4R", S::lower_w2, none, "A", "||A*A + AA*||/4 + nu'(A), nu' without the factor i", tw2,
      "term is 0 when Re(A) +- Im(A) = 0", "Maligranda refinement of ||A*A + AA*||/4 <= w^2(A), corrected form",
      eval_l4r);
  add("L5", S::lower_w, none, "A", "||A||/2 + gamma(A)", tw, "term is 0 when Re(A) = 0 or Im(A) = 0",
      "Maligranda refinement via Re(A), Im(A)", eval_l5);
  add("L6", S::lower_w2, none, "A", "||A*A + AA*||/4 + delta(A)", tw2, "term is 0 when Re(A) = 0 or Im(A) = 0",
      "Maligranda refinement via Re(A)^2, Im(A)^2, printed form", eval_l6);
  add("L6R", S::lower_w2, none, "A", "||A*A + AA*||/4 + delta'(A), delta' without the factor i", tw2,
      "term is 0 when Re(A) = 0 or Im(A) = 0", "Maligranda refinement via Re(A)^2, Im(A)^2, corrected form",
      eval_l6r);
  add("L7", S::lower_w2, none, "A", "||A*A + AA*||/4 + (muhat/2) max(||Re A||, ||Im A||)", tw2, always,
      "earlier refinement with muhat = | ||Re+Im|| - ||Re-Im|| |", eval_l7);

  add("U1", S::upper_w, none, "A", "||A||", tw, always, "classical upper bound; sharp for normal A", eval_u1);
  add("U2", S::upper_w, none, "A", "|| |A| + |A*| || / 2", tw, always, "mean of the moduli", eval_u2);
  add("U3", S::upper_w2, none, "A", "|| |A|^2 + |A*|^2 || / 2", tw2, always, "classical upper bound for w^2", eval_u3);
  add("U4", S::upper_w2, none, "A", "w(A^2)/2 + ||A||^2/2", tw2, always, "power-type upper bound", eval_u4);
  add("U5", S::upper_w2, none, "A", "w(A^2)/2 + || |A|^2 + |A*|^2 ||/4", tw2, always, "mixed power bound", eval_u5);
  add("U6", S::upper_w2, none, "A", "w(|A||A*|)/2 + || |A|^2 + |A*|^2 ||/4", tw2, always, "mixed modulus bound",
      eval_u6);
  add("U7", S::upper_w2, alpha, "A", "w(A M_a)/2 + || |A*|^2 + M_a^2 ||/4, M_a = (|A|^{2a} + |A*|^{2(1-a)})/2", tw2,
      always, "power family f = t^a, g = t^(1-a), first form", eval_u7);
  add("U8", S::upper_w2, alpha, "A", "w(N_a A)/2 + || |A|^2 + N_a^2 ||/4, N_a = (|A*|^{2a} + |A|^{2(1-a)})/2", tw2,
      always, "power family f = t^a, g = t^(1-a), second form", eval_u8);
  add("U9", S::upper_w2, none, "A", "min(|| |A|^2 + M^2 ||, || |A*|^2 + M^2 ||)/2, M = (|A| + |A*|)/2", tw2, always,
      "norm-only consequence of the a = 1/2 forms", eval_u9);
  add("U10a", S::upper_w2, alpha, "A", "w(A M_a)/2 + ||A|| ||M_a||/2", tw2, always,
      "operator-norm variant, first form", eval_u10a);
  add("U10b", S::upper_w2, alpha, "A", "w(N_a A)/2 + ||A|| ||N_a||/2", tw2, always,
      "operator-norm variant, second form", eval_u10b);
  add("U10min", S::upper_w2, none, "A", "min(w(AM), w(MA))/2 + ||A|| ||M||/2, M = (|A| + |A*|)/2", tw2, always,
      "operator-norm variant at a = 1/2", eval_u10min);
  add("U11", S::upper_w2, none, "A", "w(A^2)/4 + ||A,A*||_e^2/4 + ||A*A + AA*||/8", tw2, always,
      "Euclidean operator norm bound", eval_u11);
  add("U12", S::upper_w2, none, "A", "w(A^2)/4 + w_e(A,A*)^2/4 + ||A*A + AA*||/8", tw2, always,
      "Euclidean operator radius bound", eval_u12);
  add("U13", S::upper_w, t, "A", "min over a,b > 0 of sqrt(ab/2) w_e(|A*|^{2(1-t)}/a, |A|^{2t}/b)", tw, always,
      "positive block with the polar factors", eval_u13);
  add("U14", S::upper_w, t, "A", "w_e(|A|^{2t}, |A*|^{2(1-t)}) / sqrt(2)", tw, always,
      "product bound with B = I", eval_u14);
  add("U15", S::upper_w, p, "A", "2^{-1/p} w_p(|A|, |A*|)", tw, always, "single-term sum bound", eval_u15);

  add("P1", S::upper_product, none, "B,C", "min over a,b > 0 of sqrt(ab/2) w_e(BB*/a, C*C/b)", "w(BC)", always,
      "Gram block [[BB*, BC], [C*B*, C*C]]", eval_p1);
  add("P2", S::upper_product, t, "B", "r(B)/sqrt(2) w_e(|A|^{2t}, |A*|^{2(1-t)})", "w(AB)",
      "||(|A|B - B*|A|)||_F <= 1e-8 max(1, ||A|| ||B||)", "products with |A|B = B*|A|", eval_p2);
  add("P3", S::upper_product, p3, "block", "sqrt(ab/2) w_e(h(P)/a, h(Q)/b), h(t) = t^h", "h(w(C))",
      "P, Q and [[P, C*], [C, Q]] positive semidefinite", "increasing double convex h on a positive block",
      eval_p3);
  add("P4", S::upper_product, pt, "terms",
      "(m^{p-1}/2) sum_i w_p^p(B_i* |X_i|^{2t} B_i, A_i* |X_i*|^{2(1-t)} A_i)", "w^p(sum_i A_i* X_i B_i)", always,
      "sums of products via the p-numerical radius", eval_p4);

  add("C0", S::upper_commutator, none, "B,X,Y", "2 sqrt(2) max(||XB||, ||BY||) w(A)", "max w(AXB +- BYA)", always,
      "Fong-Holbrook, generalized to X, Y", eval_c0);
  add("C1", S::upper_commutator, none, "B,X,Y", "2 sqrt(2) max(||XB||, ||BY||) sqrt(w^2(A) - nu(A))",
      "max w(AXB +- BYA)", always, "generalized commutators via nu, printed form", eval_c1);
  add("C1R", S::upper_commutator, none, "B,X,Y", "2 sqrt(2) max(||XB||, ||BY||) sqrt(w^2(A) - nu'(A))",
      "max w(AXB +- BYA)", always, "generalized commutators via nu, corrected form", eval_c1r);
  add("C2", S::upper_commutator, none, "B,X,Y", "2 sqrt(2) max(||XB||, ||BY||) sqrt(w^2(A) - delta(A))",
      "max w(AXB +- BYA)", always, "generalized commutators via delta, printed form", eval_c2);
  add("C2R", S::upper_commutator, none, "B,X,Y", "2 sqrt(2) max(||XB||, ||BY||) sqrt(w^2(A) - delta'(A))",
      "max w(AXB +- BYA)", always, "generalized commutators via delta, corrected form", eval_c2r);
  return e;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = build();
  return e;
}

const Entry& find_entry(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.spec.id == id) return e;
  }
  throw Error(ErrorCode::UnknownBoundId, std::string(id));
}

void check_params(const BoundSpec& spec, const Params& params) {
  for (const auto& s : spec.params) {
    auto it = params.find(s.name);
    if (it == params.end()) throw Error(ErrorCode::InvalidArgument, spec.id + ": missing parameter " + s.name);
    const double v = it->second;
    bool ok = std::isfinite(v) && v <= s.max && (s.min_exclusive ? v > s.min : v >= s.min);
    if (ok && !s.choices.empty()) ok = std::find(s.choices.begin(), s.choices.end(), v) != s.choices.end();
    if (!ok) throw Error(ErrorCode::InvalidArgument, spec.id + ": parameter " + s.name + " out of range");
  }
}

}  // namespace

const std::vector<BoundSpec>& catalog() {
  static const std::vector<BoundSpec> specs = [] {
    std::vector<BoundSpec> v;
    for (const auto& e : entries()) v.push_back(e.spec);
    return v;
  }();
  return specs;
}

const BoundSpec& find_bound(std::string_view id) {
  for (const auto& s : catalog()) {
    if (s.id == id) return s;
  }
  throw Error(ErrorCode::UnknownBoundId, std::string(id));
}

std::vector<Params> parameter_grid(const BoundSpec& spec, bool fine) {
  std::vector<Params> out{Params{}};
  for (const auto& s : spec.params) {
    const auto& values = fine ? s.fine_grid : s.default_grid;
    std::vector<Params> next;
    for (const auto& base : out) {
      for (double v : values) {
        Params p = base;
        p[s.name] = v;
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

BoundResult eval_bound(const BoundSpec& spec, const Params& params, EvalContext& ctx) {
  const Entry& e = find_entry(spec.id);
  check_params(e.spec, params);
  BoundResult r;
  r.id = e.spec.id;
  r.params = params;
  r.side = e.spec.side;
  r.target_name = e.spec.target;
  if (e.spec.side == BoundSide::lower_w || e.spec.side == BoundSide::upper_w) {
    r.target = ctx.w_q();
  } else if (e.spec.side == BoundSide::lower_w2 || e.spec.side == BoundSide::upper_w2) {
    const Quantity w = ctx.w_q();
    r.target = w * w;
  }
  e.eval(params, ctx, r);
  if (!r.applicable) {
    r.slack = 0.0;
    return r;
  }
  r.certified = std::isfinite(r.value.hi) && std::isfinite(r.target.hi);
  r.slack = is_lower(r.side) ? r.target.v - r.value.v : r.value.v - r.target.v;
  return r;
}

BoundResult eval_bound(std::string_view id, const Params& params, EvalContext& ctx) {
  return eval_bound(find_bound(id), params, ctx);
}

}  // namespace numrad
