#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <thread>

#include "numrad/error.hpp"
#include "numrad/hermitian.hpp"
#include "numrad/verify.hpp"

namespace numrad {
namespace {

constexpr double kChainSlack = 1e-7;

struct PairSpec {
  const char* a;
  const char* b;
};

// Pairs known to be incomparable in general.
constexpr PairSpec kPairs[] = {
    {"U5", "U6"},
    {"U7:alpha=0.5|U8:alpha=0.5", "U10min"},
    {"U4", "U10min"},
    {"U6", "U7:alpha=0.5"},
    {"U12", "U11"},
    {"U3", "U9"},
    {"L3", "L5"},
};

class ChainBuilder {
 public:
  explicit ChainBuilder(std::vector<ChainLink>& out) : out_(out) {}

  void link(const std::string& chain, const std::string& lhs_name, const Quantity& lhs, const std::string& rhs_name,
            const Quantity& rhs) {
    ChainLink l{chain, lhs_name, rhs_name, lhs, rhs, lhs.lo <= rhs.hi + kChainSlack};
    out_.push_back(std::move(l));
  }

 private:
  std::vector<ChainLink>& out_;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

Quantity bound_value(EvalContext& ctx, const char* id, const Params& p = {}) {
  return eval_bound(id, p, ctx).value;
}

void build_chains(EvalContext& ctx, std::vector<ChainLink>& out, bool fine) {
  ChainBuilder c(out);
  const Quantity w = ctx.w_q();
  const Quantity w2 = w * w;
  const Quantity na = ctx.norm_a();
  const Quantity na2 = na * na;
  const Quantity half_s = 0.5 * ctx.norm_s();

  const Quantity l3 = bound_value(ctx, "L3");
  const Quantity l4 = bound_value(ctx, "L4");
  c.link("a", "L1", bound_value(ctx, "L1"), "L3", l3);
  c.link("a", "L3", l3, "w", w);
  c.link("a", "L2", bound_value(ctx, "L2"), "L4", l4);
  c.link("a", "L4", l4, "w^2", w2);

  const Params half{{"alpha", 0.5}};
  const Quantity u9 = bound_value(ctx, "U9");
  c.link("b", "min(U7,U8)(1/2)", qmin(bound_value(ctx, "U7", half), bound_value(ctx, "U8", half)), "U9", u9);
  c.link("b", "U9", u9, "||A||^2", na2);

  const ComplexMatrix m = hermitian_part(0.5 * (ctx.abs_pow(1.0) + ctx.abs_star_pow(1.0)));
  const Quantity nm = ctx.norm_of("chain:M", [&] { return m; });
  const Quantity am = ctx.norm_of("chain:AM", [&] { return ctx.a() * m; });
  const Quantity ma = ctx.norm_of("chain:MA", [&] { return m * ctx.a(); });
  const Quantity mid = 0.5 * qmin(am, ma) + 0.5 * (na * nm);
  c.link("c", "U10min", bound_value(ctx, "U10min"), "min(||AM||,||MA||)/2+||A||||M||/2", mid);
  c.link("c", "min(||AM||,||MA||)/2+||A||||M||/2", mid, "||A||||M||", na * nm);
  c.link("c", "||A||||M||", na * nm, "||A||^2", na2);

  const Quantity u11 = bound_value(ctx, "U11");
  c.link("d", "U12", bound_value(ctx, "U12"), "U11", u11);
  c.link("d", "U11", u11, "||A*A+AA*||/2", half_s);
  c.link("d", "||A*A+AA*||/2", half_s, "||A||^2", na2);

  const BoundSpec& u14 = find_bound("U14");
  for (const Params& p : parameter_grid(u14, fine)) {
    const double t = p.at("t");
    const Quantity v = eval_bound(u14, p, ctx).value;
    const Quantity rhs = 0.5 * ctx.norm_of("chain:e:" + num(t), [&] {
      return ctx.abs_pow(4.0 * t) + ctx.abs_star_pow(4.0 * (1.0 - t));
    });
    c.link("e", "U14(t=" + num(t) + ")^2", v * v, "|| |A|^{4t}+|A*|^{4(1-t)} ||/2", rhs);
  }

  const BoundSpec& u15 = find_bound("U15");
  for (const Params& p : parameter_grid(u15, fine)) {
    const double pp = p.at("p");
    const Quantity v = qpow(eval_bound(u15, p, ctx).value, pp);
    const ComplexMatrix& x = ctx.abs_pow(pp);
    const ComplexMatrix& y = ctx.abs_star_pow(pp);
    const Quantity mid_f = 0.5 * ctx.norm_of("chain:f:" + num(pp), [&] { return x + y; });
    const Quantity top = (1.0 / std::numbers::sqrt2) *
                         Quantity::of(ctx.w_of("chain:f:w:" + num(pp), [&] { return x + cplx(0.0, 1.0) * y; }));
    const std::string tag = "(p=" + num(pp) + ")";
    c.link("f", "U15" + tag + "^p", v, "|| |A|^p+|A*|^p ||/2" + tag, mid_f);
    c.link("f", "|| |A|^p+|A*|^p ||/2" + tag, mid_f, "w(|A|^p+i|A*|^p)/sqrt2" + tag, top);
  }

  const auto& terms = ctx.operands().terms;
  if (!terms.empty()) {
    const BoundSpec& p4 = find_bound("P4");
    const double count = static_cast<double>(terms.size());
    for (const Params& p : parameter_grid(p4, fine)) {
      const double pp = p.at("p");
      const double t = p.at("t");
      const BoundResult r = eval_bound(p4, p, ctx);
      if (!r.applicable) continue;
      const std::string tag = "(p=" + num(pp) + ",t=" + num(t) + ")";
      const Quantity wv = Quantity::of(ctx.w_of("chain:g:" + tag, [&] {
        ComplexMatrix sx(ctx.a().n());
        ComplexMatrix sy(ctx.a().n());
        for (const auto& term : terms) {
          const ComplexMatrix fx = psd_power(hermitian_part(adjoint(term.x) * term.x), t);
          const ComplexMatrix gx = psd_power(hermitian_part(term.x * adjoint(term.x)), 1.0 - t);
          sx += psd_power(hermitian_part(adjoint(term.b) * fx * term.b), pp);
          sy += psd_power(hermitian_part(adjoint(term.a) * gx * term.a), pp);
        }
        return sx + cplx(0.0, 1.0) * sy;
      }));
      c.link("g", "P4" + tag, r.value, "m^{p-1}/sqrt2 w(sum[..]^p + i sum[..]^p)" + tag,
             (std::pow(count, pp - 1.0) / std::numbers::sqrt2) * wv);
    }
  }
}

void record_pairs(EvalContext& ctx, std::vector<DominanceOutcome>& out) {
  const double w = ctx.w().value;
  for (const PairSpec& ps : kPairs) {
    const CompositeBound a = CompositeBound::parse(ps.a);
    const CompositeBound b = CompositeBound::parse(ps.b);
    BoundSide side = BoundSide::upper_w;
    const double va = composite_value(a, ctx, &side);
    const double vb = composite_value(b, ctx, &side);
    if (std::isnan(va) || std::isnan(vb)) continue;
    const double scale = (side == BoundSide::lower_w2 || side == BoundSide::upper_w2) ? w * w : w;
    const double diff = (va - vb) / std::max(scale, 1e-300);
    DominanceOutcome o{a.label, b.label, Winner::tie, std::abs(diff)};
    if (std::abs(diff) > 1e-9) {
      const bool a_smaller = diff < 0.0;
      o.winner = (a_smaller != is_lower(side)) ? Winner::a : Winner::b;
    } else {
      o.margin = 0.0;
    }
    out.push_back(std::move(o));
  }
}

}  // namespace

std::string_view to_string(Winner w) noexcept {
  switch (w) {
    case Winner::a: return "a";
    case Winner::b: return "b";
    case Winner::tie: return "tie";
  }
  return "tie";
}

Operands harness_operands(const ComplexMatrix& a, std::uint64_t seed) {
  const std::size_t n = a.n();
  Rng rng(hash_combine(seed, hash_string("operands")));
  Operands ops(a);
  const ComplexMatrix b = rng.ginibre(n);
  const ComplexMatrix c = rng.ginibre(n);
  ops.b = b;
  ops.c = c;
  ops.x = rng.ginibre(n);
  ops.y = rng.ginibre(n);
  ops.block = PositiveBlock{hermitian_part(b * adjoint(b)), hermitian_part(adjoint(c) * c), adjoint(c) * adjoint(b)};
  const ComplexMatrix id = ComplexMatrix::identity(n);
  ops.terms.push_back({id, a, id});
  ops.terms.push_back({rng.ginibre(n), rng.ginibre(n), rng.ginibre(n)});
  return ops;
}

std::optional<Violation> check_violation(const BoundResult& r) {
  if (!r.applicable) return std::nullopt;
  auto finite_width = [](const Quantity& q) {
    const double hi = std::isfinite(q.hi) ? q.hi : q.v;
    return hi - q.lo;
  };
  const double widths = finite_width(r.value) + finite_width(r.target);
  const double allowance = widths + (r.certified ? 1e-7 : 1e-4);
  const double excess = -r.slack - allowance;
  if (excess <= 0.0) return std::nullopt;
  return Violation{r.id, r.params, r.slack, excess, r.certified};
}

VerificationReport verify_matrix(const ComplexMatrix& a, const HarnessOptions& opt, std::uint64_t seed) {
  VerificationReport rep;
  rep.n = a.n();
  rep.seed = seed;

  EvalContext ctx(harness_operands(a, seed), opt.radius);
  // The product entry with |A|B = B*|A| gets its own B = K|A|, K Hermitian.
  Operands commuting(a);
  {
    Rng rng(hash_combine(seed, hash_string("commuting")));
    commuting.b = hermitian_part(rng.ginibre(a.n())) * abs_op(a);
  }
  EvalContext commuting_ctx(std::move(commuting), opt.radius);

  std::vector<const BoundSpec*> specs;
  if (opt.bound_ids.empty()) {
    for (const auto& s : catalog()) specs.push_back(&s);
  } else {
    for (const auto& id : opt.bound_ids) specs.push_back(&find_bound(id));
  }

  try {
    rep.radii.emplace("w", ctx.w());
    const double na = ctx.norm_a().v;
    rep.radii.emplace("norm", RadiusEstimate{na, na, na, {}, RadiusMethod::hermitian_eigen});
    rep.radii.emplace("spectral", ctx.radius("spectral", [&] { return spectral_radius(a); }));
    rep.radii.emplace("w_e(A,A*)", ctx.radius("w_e(A,A*)", [&] { return euclid_radius(a, ctx.a_star(), opt.radius); }));
    rep.radii.emplace("||A,A*||_e", ctx.radius("||A,A*||_e", [&] { return euclid_norm(a, ctx.a_star(), opt.radius); }));
    rep.terms = ctx.terms();
  } catch (const Error& e) {
    rep.errors.push_back(e.what());
    return rep;
  }

  for (const BoundSpec* spec : specs) {
    EvalContext& use = spec->id == "P2" ? commuting_ctx : ctx;
    for (const Params& p : parameter_grid(*spec, opt.fine_grid)) {
      try {
        BoundResult r = eval_bound(*spec, p, use);
        if (auto v = check_violation(r)) rep.violations.push_back(std::move(*v));
        rep.bound_results.push_back(std::move(r));
      } catch (const Error& e) {
        rep.errors.push_back(spec->id + " " + params_string(p) + ": " + e.what());
      }
    }
  }

  try {
    build_chains(ctx, rep.chains, opt.fine_grid);
    record_pairs(ctx, rep.dominance);
  } catch (const Error& e) {
    rep.errors.push_back(std::string("chains: ") + e.what());
  }
  return rep;
}

std::vector<VerificationReport> verify_all(const MatrixFamily& family, const HarnessOptions& opt) {
  std::vector<VerificationReport> out(family.count);
  auto run = [&](std::size_t i) {
    const std::uint64_t seed = sample_seed(family.seed, family.kind, family.n, i);
    VerificationReport r;
    try {
      r = verify_matrix(generate_one(family, i), opt, seed);
    } catch (const Error& e) {
      r.errors.push_back(e.what());
    }
    r.matrix_id = matrix_id(family.kind, family.n, family.seed, i);
    r.family = family.kind;
    r.n = family.n;
    r.index = i;
    r.seed = seed;
    out[i] = std::move(r);
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(family.count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < family.count; ++i) run(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < family.count; i = next++) run(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

HarnessSummary summarize(const std::vector<VerificationReport>& reports) {
  HarnessSummary s;
  for (const auto& r : reports) {
    ++s.samples;
    s.errors += r.errors.size();
    for (const auto& b : r.bound_results) {
      ++s.evaluations;
      if (!b.applicable) ++s.not_applicable;
    }
    for (const auto& v : r.violations) {
      if (v.certain) ++s.certified_violations;
      else ++s.uncertain_violations;
      ++s.violations_by_bound[v.id];
      double& worst = s.worst_excess_by_bound[v.id];
      worst = std::max(worst, v.excess);
    }
    for (const auto& c : r.chains) {
      if (!c.holds) {
        ++s.chain_failures;
        ++s.failures_by_chain[c.chain];
      }
    }
  }
  return s;
}

void merge(HarnessSummary& into, const HarnessSummary& from) {
  into.samples += from.samples;
  into.evaluations += from.evaluations;
  into.not_applicable += from.not_applicable;
  into.certified_violations += from.certified_violations;
  into.uncertain_violations += from.uncertain_violations;
  into.chain_failures += from.chain_failures;
  into.errors += from.errors;
  for (const auto& [k, v] : from.violations_by_bound) into.violations_by_bound[k] += v;
  for (const auto& [k, v] : from.failures_by_chain) into.failures_by_chain[k] += v;
  for (const auto& [k, v] : from.worst_excess_by_bound) {
    double& w = into.worst_excess_by_bound[k];
    w = std::max(w, v);
  }
}

}  // namespace numrad
