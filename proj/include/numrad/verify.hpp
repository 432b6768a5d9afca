#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numrad/bounds.hpp"
#include "numrad/complex_matrix.hpp"
#include "numrad/radii.hpp"
#include "numrad/random.hpp"

namespace numrad {

// ---- random families -------------------------------------------------------

enum class FamilyKind { ginibre, nilpotent, normal, unitary, rank_one, hermitian, shifted_ginibre, triangular };

std::string_view to_string(FamilyKind k) noexcept;
/// Throws UnknownFamily.
FamilyKind parse_family(std::string_view name);
const std::vector<FamilyKind>& all_families();

struct MatrixFamily {
  FamilyKind kind = FamilyKind::ginibre;
  std::size_t n = 4;
  std::uint64_t seed = 42;
  std::size_t count = 1;
};

/// Seed of one sample, a hash of (master seed, family, n, index).
std::uint64_t sample_seed(std::uint64_t master, FamilyKind kind, std::size_t n, std::size_t index) noexcept;

/// "<family>-n<n>-s<seed>-i<index>"
std::string matrix_id(FamilyKind kind, std::size_t n, std::uint64_t seed, std::size_t index);

ComplexMatrix random_unitary(Rng& rng, std::size_t n);
ComplexMatrix sample_matrix(FamilyKind kind, std::size_t n, Rng& rng);
/// Sample `index` of the family; identical arguments give identical bits.
ComplexMatrix generate_one(const MatrixFamily& family, std::size_t index);
std::vector<ComplexMatrix> generate(const MatrixFamily& family);

// ---- harness ---------------------------------------------------------------

struct HarnessOptions {
  /// Empty means the whole catalog.
  std::vector<std::string> bound_ids;
  bool fine_grid = false;
  unsigned jobs = 1;
  RadiusOptions radius;
};

struct Violation {
  std::string id;
  Params params;
  double slack = 0.0;
  /// How far the slack is beyond the enclosure widths plus 1e-7.
  double excess = 0.0;
  bool certain = true;
};

/// One link lhs <= rhs of a refinement chain, compared as lhs.lo <= rhs.hi + 1e-7.
struct ChainLink {
  std::string chain;
  std::string lhs_name;
  std::string rhs_name;
  Quantity lhs;
  Quantity rhs;
  bool holds = true;
};

enum class Winner { a, b, tie };
std::string_view to_string(Winner w) noexcept;

struct DominanceOutcome {
  std::string a;
  std::string b;
  Winner winner = Winner::tie;
  /// Tightness gain of the winner relative to w (or w^2).
  double margin = 0.0;
};

struct VerificationReport {
  std::string matrix_id;
  FamilyKind family = FamilyKind::ginibre;
  std::size_t n = 0;
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::map<std::string, RadiusEstimate> radii;
  RefinementTerms terms;
  std::vector<BoundResult> bound_results;
  std::vector<Violation> violations;
  std::vector<ChainLink> chains;
  std::vector<DominanceOutcome> dominance;
  std::vector<std::string> errors;
};

struct HarnessSummary {
  std::size_t samples = 0;
  std::size_t evaluations = 0;
  std::size_t not_applicable = 0;
  std::size_t certified_violations = 0;
  std::size_t uncertain_violations = 0;
  std::size_t chain_failures = 0;
  std::size_t errors = 0;
  std::map<std::string, std::size_t> violations_by_bound;
  std::map<std::string, std::size_t> failures_by_chain;
  std::map<std::string, double> worst_excess_by_bound;
};

/// Extra operands the harness draws for a sample: B, C, X, Y, the Gram block
/// of (B, C) and the product terms (I, A, I), (A1, X1, B1).
Operands harness_operands(const ComplexMatrix& a, std::uint64_t seed);

/// Full check of one matrix.
VerificationReport verify_matrix(const ComplexMatrix& a, const HarnessOptions& opt, std::uint64_t seed = 0);
/// Verification of every sample of the family. Samples run on `opt.jobs`
/// threads and are returned in index order.
std::vector<VerificationReport> verify_all(const MatrixFamily& family, const HarnessOptions& opt);
HarnessSummary summarize(const std::vector<VerificationReport>& reports);
void merge(HarnessSummary& into, const HarnessSummary& from);

/// A violation is certain when slack < -(widths + 1e-7) with both sides
/// certified; otherwise uncertified values use a 1e-4 allowance.
std::optional<Violation> check_violation(const BoundResult& r);

// ---- dominance -------------------------------------------------------------

/// The best (smallest upper, largest lower) of several catalog members,
/// written as "ID" or "ID:key=value,..." joined by '|'.
struct CompositeBound {
  std::string label;
  std::vector<std::pair<std::string, Params>> members;

  static CompositeBound parse(std::string_view text);
};

struct DominanceWitness {
  ComplexMatrix matrix;
  std::string source;
  double value_a = 0.0;
  double value_b = 0.0;
  /// (value of the loser - value of the winner) / w or w^2.
  double margin = 0.0;
};

struct DominanceResult {
  std::string a;
  std::string b;
  std::size_t sampled = 0;
  /// Witness where a is strictly tighter than b, and the converse.
  std::optional<DominanceWitness> a_tighter;
  std::optional<DominanceWitness> b_tighter;
};

/// Evaluates the seeds first, then samples up to `budget` random matrices
/// across the families, and stops once both directions are witnessed.
/// Margins below 1e-9 relative count as ties.
DominanceResult dominance_search(const CompositeBound& a, const CompositeBound& b, std::size_t budget,
                                 std::uint64_t seed, const std::vector<ComplexMatrix>& seeds = {},
                                 const RadiusOptions& opt = {});

/// Value of a composite bound; NaN when no member applies. `side`
/// receives the side of the members.
double composite_value(const CompositeBound& c, EvalContext& ctx, BoundSide* side = nullptr);

// ---- lemma suite -----------------------------------------------------------

struct LemmaOutcome {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Largest observed (lhs - rhs); <= 1e-9 passes.
  double worst = -1e300;
};

struct LemmaReport {
  std::vector<LemmaOutcome> lemmas;
  bool passed() const;
};

LemmaReport lemma_property_suite(std::uint64_t seed, std::size_t trials);

// ---- worked examples -------------------------------------------------------

struct PaperCheck {
  std::string claim;
  double paper_value = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;

  double delta() const { return computed - paper_value; }
  bool passed() const;
};

struct ComparisonCheck {
  std::string claim;
  double left = 0.0;
  double right = 0.0;
  /// Expected sign of left - right: -1 or +1.
  int expected = -1;
  bool passed() const;
};

struct ReproduceReport {
  std::vector<PaperCheck> values;
  std::vector<ComparisonCheck> comparisons;
  bool passed() const;
};

ReproduceReport reproduce_paper();

// ---- serialization ---------------------------------------------------------

/// One JSON object per line, then a summary footer line.
void write_jsonl(std::ostream& os, const std::vector<VerificationReport>& reports, const HarnessSummary& summary,
                 std::uint64_t seed);
void write_report_jsonl(std::ostream& os, const VerificationReport& report);
void write_summary_jsonl(std::ostream& os, const HarnessSummary& summary, std::uint64_t seed);
/// Rows (matrix_id, bound_id, params, value, slack).
void write_csv_header(std::ostream& os);
void write_csv_rows(std::ostream& os, const VerificationReport& report);
std::string params_string(const Params& p);

void write_reproduce(std::ostream& os, const ReproduceReport& r, std::string_view format);

}  // namespace numrad
