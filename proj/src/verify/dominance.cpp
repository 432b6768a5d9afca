#include <cmath>

#include "numrad/error.hpp"
#include "numrad/verify.hpp"

namespace numrad {

CompositeBound CompositeBound::parse(std::string_view text) {
  CompositeBound cb;
  cb.label = std::string(text);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t bar = text.find('|', start);
    if (bar == std::string_view::npos) bar = text.size();
    std::string_view part = text.substr(start, bar - start);
    const std::size_t colon = part.find(':');
    std::string id(part.substr(0, colon));
    Params params;
    if (colon != std::string_view::npos) {
      std::string_view rest = part.substr(colon + 1);
      std::size_t s = 0;
      while (s < rest.size()) {
        std::size_t comma = rest.find(',', s);
        if (comma == std::string_view::npos) comma = rest.size();
        std::string_view kv = rest.substr(s, comma - s);
        const std::size_t eq = kv.find('=');
        if (eq == std::string_view::npos) throw Error(ErrorCode::InvalidArgument, "expected key=value in " + cb.label);
        try {
          params[std::string(kv.substr(0, eq))] = std::stod(std::string(kv.substr(eq + 1)));
        } catch (const std::exception&) {
          throw Error(ErrorCode::InvalidArgument, "bad number in " + cb.label);
        }
        s = comma + 1;
      }
    }
    const BoundSpec& spec = find_bound(id);
    // Fill unspecified parameters from the first default grid point.
    for (const auto& ps : spec.params) {
      if (!params.count(ps.name)) params[ps.name] = ps.default_grid.front();
    }
    cb.members.emplace_back(std::move(id), std::move(params));
    start = bar + 1;
  }
  return cb;
}

double composite_value(const CompositeBound& cb, EvalContext& ctx, BoundSide* side) {
  double best = 0.0;
  bool first = true;
  for (const auto& [id, params] : cb.members) {
    const BoundResult r = eval_bound(id, params, ctx);
    if (!r.applicable) continue;
    if (side) *side = r.side;
    const double v = r.value.v;
    if (first) best = v;
    else best = is_lower(r.side) ? std::max(best, v) : std::min(best, v);
    first = false;
  }
  if (first) return std::nan("");
  return best;
}

DominanceResult dominance_search(const CompositeBound& a, const CompositeBound& b, std::size_t budget,
                                 std::uint64_t seed, const std::vector<ComplexMatrix>& seeds,
                                 const RadiusOptions& opt) {
  DominanceResult res;
  res.a = a.label;
  res.b = b.label;

  auto consider = [&](const ComplexMatrix& m, const std::string& source, std::uint64_t op_seed) {
    EvalContext ctx(harness_operands(m, op_seed), opt);
    BoundSide side = BoundSide::upper_w;
    const double va = composite_value(a, ctx, &side);
    const double vb = composite_value(b, ctx, &side);
    if (std::isnan(va) || std::isnan(vb)) return;
    const double w = ctx.w().value;
    const double scale = (side == BoundSide::lower_w2 || side == BoundSide::upper_w2) ? w * w : w;
    if (!(scale > 0.0)) return;
    double gain = (vb - va) / scale;  // > 0 when a is tighter
    if (is_lower(side)) gain = -gain;
    if (std::abs(gain) <= 1e-9) return;
    auto& slot = gain > 0.0 ? res.a_tighter : res.b_tighter;
    const double margin = std::abs(gain);
    if (!slot || margin > slot->margin) slot = DominanceWitness{m, source, va, vb, margin};
  };

  for (std::size_t i = 0; i < seeds.size(); ++i) consider(seeds[i], "seed " + std::to_string(i), hash_combine(seed, i));

  const auto& fams = all_families();
  for (std::size_t i = 0; i < budget; ++i) {
    if (res.a_tighter && res.b_tighter) break;
    const FamilyKind kind = fams[i % fams.size()];
    const std::size_t n = 2 + (i / fams.size()) % 4;
    const MatrixFamily fam{kind, n, seed, 1};
    const std::size_t index = i / (fams.size() * 4);
    const ComplexMatrix m = generate_one(fam, index);
    consider(m, matrix_id(kind, n, seed, index), sample_seed(seed, kind, n, index));
    ++res.sampled;
  }
  return res;
}

}  // namespace numrad
