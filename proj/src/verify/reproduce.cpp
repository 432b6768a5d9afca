#include <algorithm>
#include <cmath>
#include <numbers>

#include "numrad/verify.hpp"

namespace numrad {
namespace {

ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  ComplexMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const cplx& z : r) m(i, j++) = z;
    ++i;
  }
  return m;
}

double value(EvalContext& ctx, std::string_view composite) {
  return composite_value(CompositeBound::parse(composite), ctx);
}

constexpr std::string_view kCor23 = "U7:alpha=0.5|U8:alpha=0.5";
constexpr std::string_view kCor28 = "U10min";

}  // namespace

bool PaperCheck::passed() const { return std::abs(delta()) <= tolerance; }

bool ComparisonCheck::passed() const {
  const double d = left - right;
  return expected < 0 ? d < 0.0 : d > 0.0;
}

bool ReproduceReport::passed() const {
  return std::all_of(values.begin(), values.end(), [](const PaperCheck& c) { return c.passed(); }) &&
         std::all_of(comparisons.begin(), comparisons.end(), [](const ComparisonCheck& c) { return c.passed(); });
}

ReproduceReport reproduce_paper() {
  ReproduceReport rep;
  const double s2 = std::numbers::sqrt2;
  const cplx i(0.0, 1.0);

  {
    EvalContext ctx{Operands(from_rows({{0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 1, 0}}))};
    const double cor = value(ctx, kCor23);
    const double u6 = value(ctx, "U6");
    rep.values.push_back({"4x4 shift-like: alpha=1/2 bound on w^2", (std::sqrt(5.0) + std::sqrt(13.0)) / 16.0 + 0.5,
                          cor, 1e-8});
    rep.values.push_back({"4x4 shift-like: w(|A||A*|)/2 + || |A|^2+|A*|^2 ||/4", 1.0, u6, 1e-8});
    rep.comparisons.push_back({"4x4 shift-like: alpha=1/2 bound < w(|A||A*|) bound", cor, u6, -1});
  }
  {
    EvalContext ctx{Operands(from_rows({{0, 1}, {0, 0}}))};
    const double u10 = value(ctx, kCor28);
    const double u4 = value(ctx, "U4");
    rep.values.push_back({"[[0,1],[0,0]]: operator-norm bound at alpha=1/2", 3.0 / 8.0, u10, 1e-10});
    rep.values.push_back({"[[0,1],[0,0]]: w(A^2)/2 + ||A||^2/2", 0.5, u4, 1e-10});
    rep.comparisons.push_back({"[[0,1],[0,0]]: operator-norm bound < w(A^2)/2 + ||A||^2/2", u10, u4, -1});
  }
  {
    EvalContext ctx{Operands(from_rows({{1, 0}, {0, i}}))};
    const double l1 = value(ctx, "L1");
    const double l2 = value(ctx, "L2");
    const double l3 = value(ctx, "L3");
    const double l4 = value(ctx, "L4");
    const double w = ctx.w().value;
    const auto& t = ctx.terms();
    rep.values.push_back({"diag(1,i): ||A||/2", 0.5, l1, 1e-9});
    rep.values.push_back({"diag(1,i): ||A||/2 + mu(A)", 1.0 / s2, l3, 1e-9});
    rep.values.push_back({"diag(1,i): w(A)", 1.0, w, 1e-9});
    rep.values.push_back({"diag(1,i): mu(A)", 1.0 / s2 - 0.5, t.mu.value, 1e-9});
    rep.values.push_back({"diag(1,i): nu(A)", 0.5 - 1.0 / (2.0 * s2), t.nu.value, 1e-9});
    rep.values.push_back({"diag(1,i): ||A*A+AA*||/4 + nu(A)", 0.5 + (0.5 - 1.0 / (2.0 * s2)), l4, 1e-9});
    rep.comparisons.push_back({"diag(1,i): ||A||/2 < ||A||/2 + mu(A)", l1, l3, -1});
    rep.comparisons.push_back({"diag(1,i): ||A||/2 + mu(A) < w(A)", l3, w, -1});
    rep.comparisons.push_back({"diag(1,i): ||A*A+AA*||/4 < ||A*A+AA*||/4 + nu(A)", l2, l4, -1});
    rep.comparisons.push_back({"diag(1,i): ||A*A+AA*||/4 + nu(A) < w^2(A)", l4, w * w, -1});
  }
  {
    const RefinementTerms t = refinement_terms(from_rows({{1.0 + 2.0 * i, 0}, {0, 0}}));
    rep.values.push_back({"[[1+2i,0],[0,0]]: nu(A)", 0.5 * (1.0 - 1.0 / s2), t.nu.value, 1e-10});
    rep.values.push_back({"[[1+2i,0],[0,0]]: delta(A)", 1.0 - 1.0 / s2, t.delta.value, 1e-10});
  }
  {
    EvalContext c1{Operands(from_rows({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}))};
    EvalContext c2{Operands(from_rows({{0, 2, 0}, {0, 0, 3}, {0, 0, 0}}))};
    rep.comparisons.push_back({"3x3 [[0,1,0],[0,0,0],[0,0,0]]: operator-norm bound < alpha=1/2 bound",
                               value(c1, kCor28), value(c1, kCor23), -1});
    rep.comparisons.push_back({"3x3 [[0,2,0],[0,0,3],[0,0,0]]: operator-norm bound > alpha=1/2 bound",
                               value(c2, kCor28), value(c2, kCor23), +1});
  }
  return rep;
}

}  // namespace numrad
