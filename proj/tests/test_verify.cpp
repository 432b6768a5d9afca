#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

#include "numrad/error.hpp"
#include "numrad/hermitian.hpp"
#include "numrad/verify.hpp"
#include "oracles.hpp"

using namespace numrad;

namespace {

ComplexMatrix power(const ComplexMatrix& a, std::size_t k) {
  ComplexMatrix r = ComplexMatrix::identity(a.n());
  for (std::size_t i = 0; i < k; ++i) r = r * a;
  return r;
}

std::string jsonl(const std::vector<VerificationReport>& reps) {
  std::ostringstream os;
  for (const auto& r : reps) write_report_jsonl(os, r);
  return os.str();
}

}  // namespace

TEST_CASE("family names") {
  for (FamilyKind k : all_families()) CHECK(parse_family(to_string(k)) == k);
  CHECK(parse_family("shifted_ginibre") == FamilyKind::shifted_ginibre);
  CHECK_THROWS_AS(parse_family("gaussian"), Error);
  try {
    parse_family("x");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFamily);
  }
}

TEST_CASE("family structure") {
  for (std::size_t i = 0; i < 10; ++i) {
    const ComplexMatrix n2 = generate_one({FamilyKind::nilpotent, 2, 1, 10}, i);
    CHECK(n2(1, 0) == cplx(0.0));
    CHECK(frobenius_norm(n2 * n2) == 0.0);
    const ComplexMatrix n5 = generate_one({FamilyKind::nilpotent, 5, 1, 10}, i);
    CHECK(frobenius_norm(power(n5, 5)) <= 1e-12);
    const ComplexMatrix u = generate_one({FamilyKind::unitary, 3, 1, 10}, i);
    CHECK(frobenius_norm(adjoint(u) * u - ComplexMatrix::identity(3)) <= 1e-12);
    const ComplexMatrix nm = generate_one({FamilyKind::normal, 4, 1, 10}, i);
    CHECK(frobenius_norm(adjoint(nm) * nm - nm * adjoint(nm)) <= 1e-12 * std::max(1.0, frobenius_norm(nm) * frobenius_norm(nm)));
    const ComplexMatrix r1 = generate_one({FamilyKind::rank_one, 4, 1, 10}, i);
    const auto sv = herm_eig(hermitian_part(adjoint(r1) * r1)).values;
    CHECK(sv[2] <= 1e-12 * sv[3]);
    const ComplexMatrix h = generate_one({FamilyKind::hermitian, 4, 1, 10}, i);
    CHECK(hermitian_defect(h) == 0.0);
    const ComplexMatrix t = generate_one({FamilyKind::triangular, 4, 1, 10}, i);
    CHECK(is_upper_triangular(t));
  }
}

TEST_CASE("generation is reproducible") {
  for (FamilyKind k : all_families()) {
    const MatrixFamily f{k, 4, 99, 5};
    const auto a = generate(f);
    const auto b = generate(f);
    REQUIRE(a.size() == 5);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i] == b[i]);
      CHECK(a[i] == generate_one(f, i));
    }
    CHECK_FALSE(a[0] == a[1]);
    CHECK_FALSE(generate_one({k, 4, 100, 1}, 0) == a[0]);
  }
  CHECK(matrix_id(FamilyKind::ginibre, 4, 7, 3) == "ginibre-n4-s7-i3");
}

TEST_CASE("reports do not depend on the worker count") {
  HarnessOptions one;
  one.bound_ids = {"L1", "L3", "U5", "U6", "U13", "P1"};
  HarnessOptions many = one;
  many.jobs = 3;
  const MatrixFamily f{FamilyKind::ginibre, 3, 5, 6};
  CHECK(jsonl(verify_all(f, one)) == jsonl(verify_all(f, many)));
}

TEST_CASE("harness report contents") {
  HarnessOptions opt;
  const auto reps = verify_all({FamilyKind::ginibre, 3, 11, 2}, opt);
  REQUIRE(reps.size() == 2);
  const VerificationReport& r = reps[0];
  CHECK(r.matrix_id == "ginibre-n3-s11-i0");
  CHECK(r.errors.empty());
  CHECK(r.radii.count("w") == 1);
  CHECK(r.radii.count("w_e(A,A*)") == 1);
  CHECK(r.dominance.size() >= 5);
  std::set<std::string> chains;
  for (const auto& c : r.chains) chains.insert(c.chain);
  CHECK(chains == std::set<std::string>{"a", "b", "c", "d", "e", "f", "g"});
  std::size_t expected = 0;
  for (const auto& s : catalog()) expected += parameter_grid(s).size();
  CHECK(r.bound_results.size() == expected);

  const HarnessSummary s = summarize(reps);
  CHECK(s.samples == 2);
  CHECK(s.evaluations == 2 * expected);
  HarnessSummary total;
  merge(total, s);
  merge(total, s);
  CHECK(total.samples == 4);
}

TEST_CASE("violation rule") {
  BoundResult r;
  r.applicable = true;
  r.certified = true;
  r.value = Quantity::exact(1.0);
  r.target = Quantity{1.0, 1.0 - 1e-9, 1.0 + 1e-9};
  r.slack = -5e-8;
  CHECK_FALSE(check_violation(r).has_value());
  r.slack = -1e-6;
  const auto v = check_violation(r);
  REQUIRE(v.has_value());
  CHECK(v->certain);
  CHECK(v->excess == doctest::Approx(1e-6 - 2e-9 - 1e-7));
  r.certified = false;
  CHECK_FALSE(check_violation(r).has_value());
  r.slack = -1e-3;
  REQUIRE(check_violation(r).has_value());
  CHECK_FALSE(check_violation(r)->certain);
  r.applicable = false;
  CHECK_FALSE(check_violation(r).has_value());
}

TEST_CASE("composite bounds") {
  const CompositeBound c = CompositeBound::parse("U7:alpha=0.5|U8:alpha=0.5");
  REQUIRE(c.members.size() == 2);
  CHECK(c.members[0].first == "U7");
  CHECK(c.members[0].second.at("alpha") == 0.5);
  CHECK(CompositeBound::parse("U13").members[0].second.at("t") == 0.0);
  CHECK_THROWS_AS(CompositeBound::parse("Q7"), Error);
  CHECK_THROWS_AS(CompositeBound::parse("U7:alpha"), Error);
}

TEST_CASE("dominance_search") {
  {
    const DominanceResult r =
        dominance_search(CompositeBound::parse("U1"), CompositeBound::parse("U1"), 40, 1);
    CHECK_FALSE(r.a_tighter.has_value());
    CHECK_FALSE(r.b_tighter.has_value());
  }
  {
    const ComplexMatrix j{{0, 1}, {0, 0}};
    const DominanceResult r =
        dominance_search(CompositeBound::parse("U10min"), CompositeBound::parse("U4"), 0, 1, {j});
    REQUIRE(r.a_tighter.has_value());
    CHECK(std::abs(r.a_tighter->value_a - 0.375) <= 1e-10);
    CHECK(std::abs(r.a_tighter->value_b - 0.5) <= 1e-10);
  }
  {
    const ComplexMatrix s{{0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 1, 0}};
    const DominanceResult r =
        dominance_search(CompositeBound::parse("U6"), CompositeBound::parse("U7:alpha=0.5"), 0, 1, {s});
    REQUIRE(r.b_tighter.has_value());
    const double w = num_radius(s).value;
    CHECK(std::abs(r.b_tighter->margin - (1.0 - 0.86510120331) / (w * w)) <= 1e-8);
  }
}

TEST_CASE("lemma suite") {
  const LemmaReport rep = lemma_property_suite(42, 400);
  CHECK(rep.lemmas.size() == 7);
  for (const auto& l : rep.lemmas) {
    CAPTURE(l.name);
    CHECK(l.trials == 400);
    CHECK(l.failures == 0);
  }
  CHECK(rep.passed());
}

TEST_CASE("reproduce report") {
  const ReproduceReport rep = reproduce_paper();
  CHECK(rep.passed());
  CHECK(rep.values.size() >= 10);
  std::ostringstream csv;
  write_reproduce(csv, rep, "csv");
  CHECK(csv.str().rfind("claim,paper_value,computed,delta\n", 0) == 0);
  std::ostringstream js;
  write_reproduce(js, rep, "json");
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["passed"].get<bool>());
  std::ostringstream bad;
  CHECK_THROWS_AS(write_reproduce(bad, rep, "xml"), Error);
}

TEST_CASE("report serialization") {
  HarnessOptions opt;
  opt.bound_ids = {"L1", "U7"};
  const auto reps = verify_all({FamilyKind::nilpotent, 2, 3, 2}, opt);
  std::ostringstream os;
  write_jsonl(os, reps, summarize(reps), 3);
  std::istringstream in(os.str());
  std::string line;
  std::vector<nlohmann::json> rows;
  while (std::getline(in, line)) rows.push_back(nlohmann::json::parse(line));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["matrix_id"] == "nilpotent-n2-s3-i0");
  CHECK(rows[0]["bound_results"].size() == 6);
  CHECK(rows[2]["summary"]["samples"] == 2);
  CHECK(rows[2]["summary"]["seed"] == 3);
  for (const auto& b : rows[0]["bound_results"]) {
    if (b["id"] == "L1") CHECK(std::abs(b["slack"].get<double>()) <= 1e-7);
  }

  std::ostringstream csv;
  write_csv_header(csv);
  write_csv_rows(csv, reps[0]);
  const std::string text = csv.str();
  CHECK(text.rfind("matrix_id,bound_id,params,value,slack\n", 0) == 0);
  CHECK(text.find("nilpotent-n2-s3-i0,U7,alpha=0.25,") != std::string::npos);
  CHECK(params_string({{"alpha", 0.5}, {"beta", 1.0}}) == "alpha=0.5;beta=1");
}
