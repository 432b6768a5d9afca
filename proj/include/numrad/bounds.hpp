#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numrad/complex_matrix.hpp"
#include "numrad/radii.hpp"

namespace numrad {

enum class BoundSide { lower_w, upper_w, lower_w2, upper_w2, upper_product, upper_commutator };

std::string_view to_string(BoundSide s) noexcept;
bool is_lower(BoundSide s) noexcept;

/// A value together with an enclosure lo <= true value <= hi.
struct Quantity {
  double v = 0.0;
  double lo = 0.0;
  double hi = 0.0;

  static Quantity exact(double x) { return {x, x, x}; }
  /// A value known up to relative rounding `rel` (plus a tiny absolute term).
  static Quantity rounded(double x, double rel = 1e-11);
  static Quantity of(const RadiusEstimate& r);

  double width() const noexcept { return hi - lo; }
};

Quantity operator+(const Quantity& a, const Quantity& b);
Quantity operator-(const Quantity& a, const Quantity& b);
Quantity operator*(double s, const Quantity& a);  // s >= 0
Quantity operator*(const Quantity& a, const Quantity& b);  // both nonnegative
Quantity qmin(const Quantity& a, const Quantity& b);
Quantity qmax(const Quantity& a, const Quantity& b);
Quantity qsqrt(const Quantity& a);
Quantity qpow(const Quantity& a, double p);  // a >= 0, p > 0

using Params = std::map<std::string, double>;

struct ParamSchema {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  bool min_exclusive = false;
  /// Allowed values when the parameter is discrete; empty means a range.
  std::vector<double> choices;
  std::vector<double> default_grid;
  std::vector<double> fine_grid;
};

struct BoundSpec {
  std::string id;
  BoundSide side = BoundSide::upper_w;
  std::vector<ParamSchema> params;
  /// Operands the entry needs besides A, e.g. "B,C" or "terms".
  std::string operands;
  std::string formula;
  std::string target;
  std::string applicability;
  std::string paper_anchor;
};

struct BoundResult {
  std::string id;
  Params params;
  BoundSide side = BoundSide::upper_w;
  Quantity value;
  std::string target_name;
  Quantity target;
  /// target - value for lower entries, value - target for upper entries.
  double slack = 0.0;
  bool applicable = true;
  /// Both enclosures come with certified upper ends.
  bool certified = true;
  std::string note;
};

struct RefinementTerm {
  double value = 0.0;
  bool degenerate = false;
};

/// The lower-bound refinement terms built from Re(A) +- Im(A) and from
/// Re(A), Im(A). nu and delta follow the printed formulas; nu_plain and
/// delta_plain are the same expressions without the factor i.
struct RefinementTerms {
  RefinementTerm mu;
  RefinementTerm nu;
  RefinementTerm gamma;
  RefinementTerm delta;
  RefinementTerm nu_plain;
  RefinementTerm delta_plain;
  /// | ||Re + Im|| - ||Re - Im|| |
  double mu_hat = 0.0;
};

RefinementTerms refinement_terms(const ComplexMatrix& a);

struct ProductTerm {
  ComplexMatrix a;
  ComplexMatrix x;
  ComplexMatrix b;
};

/// Block [[p, c*], [c, q]] for the positive-block entry.
struct PositiveBlock {
  ComplexMatrix p;
  ComplexMatrix q;
  ComplexMatrix c;
};

/// Matrices a catalog entry may consume. Only `a` is always present.
struct Operands {
  ComplexMatrix a;
  std::optional<ComplexMatrix> b;
  std::optional<ComplexMatrix> c;
  std::optional<ComplexMatrix> x;
  std::optional<ComplexMatrix> y;
  std::vector<ProductTerm> terms;
  std::optional<PositiveBlock> block;

  explicit Operands(ComplexMatrix a_) : a(std::move(a_)) {}
};

/// Per-operand cache of the derived matrices and radii shared between
/// catalog entries. Not thread safe; use one context per sample.
class EvalContext {
 public:
  explicit EvalContext(Operands ops, RadiusOptions opt = {});
  ~EvalContext();
  EvalContext(const EvalContext&) = delete;
  EvalContext& operator=(const EvalContext&) = delete;

  const Operands& operands() const noexcept { return ops_; }
  const ComplexMatrix& a() const noexcept { return ops_.a; }
  const ComplexMatrix& a_star() const noexcept { return a_star_; }
  const RadiusOptions& options() const noexcept { return opt_; }

  /// |A|^s and |A*|^s for s >= 0.
  const ComplexMatrix& abs_pow(double s);
  const ComplexMatrix& abs_star_pow(double s);

  Quantity norm_a();
  /// || A*A + AA* ||
  Quantity norm_s();
  const RefinementTerms& terms();

  /// w(A) with its enclosure.
  const RadiusEstimate& w();
  Quantity w_q() { return Quantity::of(w()); }

  /// Cached numerical radius of a derived matrix.
  const RadiusEstimate& w_of(const std::string& key, const std::function<ComplexMatrix()>& make);
  /// Cached operator norm of a derived matrix.
  Quantity norm_of(const std::string& key, const std::function<ComplexMatrix()>& make);
  /// Cached range hull of a derived Hermitian pair.
  RangeHull& hull(const std::string& key, const std::function<std::pair<ComplexMatrix, ComplexMatrix>()>& make);
  /// Cached arbitrary radius.
  const RadiusEstimate& radius(const std::string& key, const std::function<RadiusEstimate()>& compute);

 private:
  struct Cache;
  Operands ops_;
  ComplexMatrix a_star_;
  RadiusOptions opt_;
  std::unique_ptr<Cache> cache_;
};

/// The immutable catalog, in a fixed order.
const std::vector<BoundSpec>& catalog();
/// Throws UnknownBoundId.
const BoundSpec& find_bound(std::string_view id);

/// Parameter combinations for an entry; `fine` selects the dense grid.
std::vector<Params> parameter_grid(const BoundSpec& spec, bool fine = false);

/// Evaluates one entry. Missing operands or failed hypotheses yield a
/// result with applicable = false. Throws UnknownBoundId, InvalidArgument
/// for out-of-range parameters, DimensionMismatch.
BoundResult eval_bound(const BoundSpec& spec, const Params& params, EvalContext& ctx);
BoundResult eval_bound(std::string_view id, const Params& params, EvalContext& ctx);

struct RatioMinimum {
  double rho = 1.0;
  double value = 0.0;
};

/// Golden-section minimization of a function of rho > 0 over
/// log rho in [-12, 12] to a tolerance of 1e-8 in log rho.
RatioMinimum minimize_ratio(const std::function<double(double)>& objective);

/// Weighted Euclidean radius sqrt(ab/2) w_e(X/a, Y/b) of a Hermitian pair
/// held in `hull`, minimized over the ratio a/b.
struct RatioBound {
  double rho = 1.0;
  Quantity value;
};
RatioBound min_weighted_euclid(RangeHull& hull, const RadiusOptions& opt);

struct EqualityReport {
  bool applicable = false;
  bool holds = false;
  double w = 0.0;
  double half_norm = 0.0;
  double norm_re_plus_im = 0.0;
  double norm_re_minus_im = 0.0;
  double expected = 0.0;  ///< ||A|| / sqrt(2)
  /// Norm expressions that must both equal 2 when the commutator bound is attained.
  double commutator_expr_nu = 0.0;
  double commutator_expr_delta = 0.0;
};

EqualityReport equality_condition_check(const ComplexMatrix& a);

}  // namespace numrad
