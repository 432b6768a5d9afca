// Acceptance run: prints one PASS/FAIL line per criterion, and copies the
// lines to the file named by the first argument when one is given.
//
// NUMRAD_ACCEPT_SAMPLES overrides the 500 samples per (family, n) of the
// soundness fuzz for quick local runs; the line reports the count used.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "numrad/bounds.hpp"
#include "numrad/hermitian.hpp"
#include "numrad/radii.hpp"
#include "numrad/verify.hpp"

using namespace numrad;

namespace {

using Clock = std::chrono::steady_clock;

std::FILE* copy_to = nullptr;

void emit(const std::string& line) {
  std::printf("%s\n", line.c_str());
  std::fflush(stdout);
  if (copy_to) {
    std::fprintf(copy_to, "%s\n", line.c_str());
    std::fflush(copy_to);
  }
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void report(int id, bool pass, const std::string& detail) {
  emit(fmt("criterion %d: %s  ", id, pass ? "PASS" : "FAIL") + detail);
}

std::string counts(const std::map<std::string, std::size_t>& m) {
  std::string s;
  for (const auto& [k, v] : m) s += (s.empty() ? "" : ", ") + k + ": " + std::to_string(v);
  return s.empty() ? "none" : s;
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

void criterion_worked_examples() {
  const auto t0 = Clock::now();
  const ReproduceReport rep = reproduce_paper();
  const double secs = seconds_since(t0);
  std::size_t failed = 0;
  double worst = 0.0;
  for (const auto& c : rep.values) {
    if (!c.passed()) ++failed;
    worst = std::max(worst, std::abs(c.delta()));
  }
  for (const auto& c : rep.comparisons) {
    if (!c.passed()) ++failed;
  }
  report(1, rep.passed() && secs < 5.0,
         fmt("%zu value checks, %zu orderings, %zu failed, max |delta| %.3g, %.2f s", rep.values.size(),
             rep.comparisons.size(), failed, worst, secs));
}

struct FuzzTally {
  HarnessSummary summary;
  std::size_t chain_links = 0;
  // Sharpness on 2x2 nilpotent (A^2 = 0) and on normal samples.
  std::size_t nilpotent_samples = 0;
  std::size_t normal_samples = 0;
  double worst_nilpotent = 0.0;
  double worst_normal = 0.0;
  double worst_normal_euclid = 0.0;
  double seconds = 0.0;
  std::size_t per_cell = 0;
};

FuzzTally run_fuzz() {
  FuzzTally t;
  t.per_cell = 500;
  if (const char* env = std::getenv("NUMRAD_ACCEPT_SAMPLES")) t.per_cell = std::strtoul(env, nullptr, 10);
  const FamilyKind kinds[] = {FamilyKind::ginibre, FamilyKind::nilpotent,       FamilyKind::normal,
                              FamilyKind::unitary, FamilyKind::rank_one, FamilyKind::shifted_ginibre};
  HarnessOptions opt;
  opt.jobs = worker_count();
  const auto t0 = Clock::now();
  for (FamilyKind k : kinds) {
    for (std::size_t n = 2; n <= 6; ++n) {
      const auto reps = verify_all(MatrixFamily{k, n, 42, t.per_cell}, opt);
      merge(t.summary, summarize(reps));
      for (const auto& r : reps) {
        t.chain_links += r.chains.size();
        const double w = r.radii.at("w").value;
        const double na = r.radii.at("norm").value;
        if (k == FamilyKind::nilpotent && n == 2) {
          ++t.nilpotent_samples;
          t.worst_nilpotent = std::max(t.worst_nilpotent, std::abs(w - 0.5 * na));
        }
        if (k == FamilyKind::normal) {
          ++t.normal_samples;
          t.worst_normal = std::max(t.worst_normal, std::abs(w - na));
          const double en = r.radii.at("||A,A*||_e").value;
          t.worst_normal_euclid = std::max(t.worst_normal_euclid, std::abs(na - en / std::numbers::sqrt2));
        }
      }
    }
  }
  t.seconds = seconds_since(t0);
  return t;
}

void criterion_soundness(const FuzzTally& t) {
  const auto& s = t.summary;
  report(2, s.certified_violations == 0 && s.errors == 0 && t.seconds < 600.0,
         fmt("%zu samples (%zu per family and n), %zu evaluations, %zu certified violations [%s], "
             "%zu uncertain, %zu errors, %.0f s on %u thread(s)",
             s.samples, t.per_cell, s.evaluations, s.certified_violations, counts(s.violations_by_bound).c_str(),
             s.uncertain_violations, s.errors, t.seconds, worker_count()));
}

void criterion_chains(const FuzzTally& t) {
  report(4, t.summary.chain_failures == 0,
         fmt("%zu links checked, %zu failed [%s]", t.chain_links, t.summary.chain_failures,
             counts(t.summary.failures_by_chain).c_str()));
}

void criterion_sharpness(const FuzzTally& t) {
  const bool pass = t.worst_nilpotent <= 1e-7 && t.worst_normal <= 1e-7 && t.worst_normal_euclid <= 1e-6;
  report(8, pass,
         fmt("2x2 nilpotent max |w - ||A||/2| = %.3g over %zu; normal max |w - ||A||| = %.3g, "
             "max | ||A|| - ||A,A*||_e/sqrt2 | = %.3g over %zu",
             t.worst_nilpotent, t.nilpotent_samples, t.worst_normal, t.worst_normal_euclid, t.normal_samples));
}

void criterion_oracles() {
  const auto t0 = Clock::now();
  Rng rng(hash_combine(42, hash_string("oracle agreement")));
  std::size_t checks = 0, failed = 0;
  double worst = 0.0;
  auto compare = [&](double fast, const RadiusEstimate& grid) {
    const double tol = std::max(1e-4, *grid.upper_cert - grid.lower_cert);
    const double d = std::abs(fast - grid.value);
    worst = std::max(worst, d / tol);
    ++checks;
    if (!(d <= tol)) ++failed;
  };
  for (std::size_t n : {2u, 3u}) {
    const std::size_t res = n == 2 ? 160 : 18;
    for (int s = 0; s < 50; ++s) {
      const ComplexMatrix a = rng.ginibre(n);
      const ComplexMatrix b = rng.ginibre(n);
      compare(num_radius(a).value, sphere_oracle(SphereObjective::w(a), n, res));
      compare(euclid_radius(a, b).value, sphere_oracle(SphereObjective::we(a, b), n, res));
      for (double p : {1.0, 2.0, 3.0}) {
        compare(p_num_radius(a, b, p).value, sphere_oracle(SphereObjective::wp(a, b, p), n, res));
      }
    }
  }
  report(3, failed == 0,
         fmt("%zu comparisons, %zu outside tolerance, worst |fast - oracle| / tol = %.3g, %.1f s", checks, failed,
             worst, seconds_since(t0)));
}

void criterion_incomparability() {
  const auto t0 = Clock::now();
  const DominanceResult u56 = dominance_search(CompositeBound::parse("U5"), CompositeBound::parse("U6"), 100000, 42);
  const ComplexMatrix m1{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
  const ComplexMatrix m2{{0, 2, 0}, {0, 0, 3}, {0, 0, 0}};
  const DominanceResult cor = dominance_search(CompositeBound::parse("U7:alpha=0.5|U8:alpha=0.5"),
                                               CompositeBound::parse("U10min"), 0, 42, {m1, m2});
  // Expected: the operator-norm bound wins on the first matrix, the alpha = 1/2 bound on the second.
  const bool cor_ok = cor.a_tighter && cor.b_tighter && cor.a_tighter->matrix == m2 && cor.b_tighter->matrix == m1;
  const bool pass = u56.a_tighter && u56.b_tighter && cor_ok;
  auto margin = [](const std::optional<DominanceWitness>& w) { return w ? w->margin : 0.0; };
  auto source = [](const std::optional<DominanceWitness>& w) { return w ? w->source : std::string("none"); };
  report(5, pass,
         fmt("U5 tighter: %s (margin %.3g); U6 tighter: %s (margin %.3g); %zu sampled; 3x3 pair %s "
             "(first matrix: operator-norm form %.4g < alpha=1/2 form %.4g; second: alpha=1/2 form %.4g < %.4g); "
             "%.1f s",
             source(u56.a_tighter).c_str(), margin(u56.a_tighter), source(u56.b_tighter).c_str(),
             margin(u56.b_tighter), u56.sampled, cor_ok ? "reproduced" : "not reproduced",
             cor.b_tighter ? cor.b_tighter->value_b : NAN, cor.b_tighter ? cor.b_tighter->value_a : NAN,
             cor.a_tighter ? cor.a_tighter->value_a : NAN, cor.a_tighter ? cor.a_tighter->value_b : NAN,
             seconds_since(t0)));
}

void criterion_lemmas() {
  const LemmaReport rep = lemma_property_suite(42, 10000);
  std::string detail;
  for (const auto& l : rep.lemmas) {
    detail += fmt("%s%s %zu/%zu", detail.empty() ? "" : ", ", l.name.c_str(), l.failures, l.trials);
  }
  report(6, rep.passed(), "failures/trials: " + detail);
}

void criterion_commutators() {
  std::size_t quads = 0, above_min = 0, above_c0 = 0;
  double worst = -INFINITY;
  std::map<std::string, std::size_t> culprits;
  const FamilyKind kinds[] = {FamilyKind::ginibre, FamilyKind::nilpotent, FamilyKind::normal,
                              FamilyKind::unitary, FamilyKind::rank_one,  FamilyKind::shifted_ginibre};
  for (std::size_t i = 0; i < 200; ++i) {
    const FamilyKind k = kinds[i % 6];
    const std::size_t n = 2 + (i / 6) % 5;
    const std::uint64_t seed = sample_seed(42, k, n, i);
    const ComplexMatrix a = generate_one(MatrixFamily{k, n, 7, 200}, i);
    EvalContext ctx(harness_operands(a, seed));
    const BoundResult c0 = eval_bound("C0", {}, ctx);
    const BoundResult c1 = eval_bound("C1", {}, ctx);
    const BoundResult c2 = eval_bound("C2", {}, ctx);
    ++quads;
    const double target = c0.target.lo;
    double best = c0.value.hi;
    const char* arg = "C0";
    for (const BoundResult* r : {&c1, &c2}) {
      if (r->value.hi < best) {
        best = r->value.hi;
        arg = r->id.c_str();
      }
      if (r->value.lo > c0.value.hi + 1e-12) ++above_c0;
    }
    worst = std::max(worst, target - best);
    if (target > best + 1e-7) {
      ++above_min;
      ++culprits[arg];
    }
  }
  report(7, above_min == 0 && above_c0 == 0,
         fmt("%zu quadruples; w(AXB +- BYA) > min(C0, C1, C2) + 1e-7 on %zu [%s], worst excess %.3g; "
             "C1 or C2 above C0 on %zu",
             quads, above_min, counts(culprits).c_str(), worst, above_c0));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && !(copy_to = std::fopen(argv[1], "w"))) {
    std::fprintf(stderr, "cannot write %s\n", argv[1]);
    return 3;
  }
  emit(fmt("acceptance run, seed 42, %u worker thread(s)", worker_count()));
  criterion_worked_examples();
  const FuzzTally fuzz = run_fuzz();
  criterion_soundness(fuzz);
  criterion_oracles();
  criterion_chains(fuzz);
  criterion_incomparability();
  criterion_lemmas();
  criterion_commutators();
  criterion_sharpness(fuzz);
  if (copy_to) std::fclose(copy_to);
  return 0;
}
