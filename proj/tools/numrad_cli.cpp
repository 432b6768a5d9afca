#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "numrad/bounds.hpp"
#include "numrad/error.hpp"
#include "numrad/hermitian.hpp"
#include "numrad/matrix_io.hpp"
#include "numrad/radii.hpp"
#include "numrad/verify.hpp"

namespace {

using namespace numrad;
using nlohmann::json;

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kIo = 3 };

std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

struct MatrixSource {
  std::string path;
  std::string inline_text;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", path, "Matrix file {\"n\": N, \"rows\": [[[re, im], ...], ...]}");
    cmd->add_option("--matrix", inline_text, "Inline real matrix, e.g. \"[[0,1],[0,0]]\"");
  }

  ComplexMatrix load() const {
    if (!inline_text.empty()) return parse_real_shorthand(inline_text);
    if (path.empty()) throw Error(ErrorCode::InvalidArgument, "a matrix file or --matrix is required");
    return read_matrix_file(path);
  }
};

/// Output stream for --out, or stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw Error(ErrorCode::IoError, "cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void finish(const std::string& path) {
    if (!file_.is_open()) return;
    file_.flush();
    if (!file_) throw Error(ErrorCode::IoError, "write failed for " + path);
  }

 private:
  std::ofstream file_;
};

json estimate_json(const RadiusEstimate& r) {
  json j{{"value", r.value}, {"lower_cert", r.lower_cert}, {"method", std::string(to_string(r.method))}};
  j["upper_cert"] = r.upper_cert ? json(*r.upper_cert) : json(nullptr);
  return j;
}

std::string estimate_text(const RadiusEstimate& r) {
  std::string s = g12(r.value) + "  [" + g12(r.lower_cert) + ", ";
  s += r.upper_cert ? g12(*r.upper_cert) : std::string("none");
  return s + "]";
}

int cmd_eval(const MatrixSource& src, const std::string& format) {
  const ComplexMatrix a = src.load();
  const ComplexMatrix as = adjoint(a);
  std::vector<std::pair<std::string, RadiusEstimate>> rows;
  rows.emplace_back("w(A)", num_radius(a));
  const double na = op_norm(a);
  rows.emplace_back("||A||", RadiusEstimate{na, na, na, {}, RadiusMethod::hermitian_eigen});
  rows.emplace_back("r(A)", spectral_radius(a));
  rows.emplace_back("w_e(A,A*)", euclid_radius(a, as));
  const ComplexMatrix abs_a = abs_op(a);
  const ComplexMatrix abs_as = abs_op(as);
  for (double p : {1.0, 2.0}) rows.emplace_back("w_" + g12(p) + "(|A|,|A*|)", p_num_radius(abs_a, abs_as, p));

  if (format == "json") {
    json j = json::object();
    for (const auto& [k, v] : rows) j[k] = estimate_json(v);
    std::cout << j.dump(2) << '\n';
  } else if (format == "text") {
    for (const auto& [k, v] : rows) std::cout << k << " = " << estimate_text(v) << '\n';
  } else if (format == "csv") {
    std::cout << "quantity,value,lower_cert,upper_cert\n";
    for (const auto& [k, v] : rows) {
      std::cout << k << ',' << json(v.value).dump() << ',' << json(v.lower_cert).dump() << ','
                << (v.upper_cert ? json(*v.upper_cert).dump() : "") << '\n';
    }
  }
  return kOk;
}

int cmd_bounds(const MatrixSource& src, const HarnessOptions& opt, std::uint64_t seed, const std::string& format,
               const std::string& out_path) {
  const ComplexMatrix a = src.load();
  VerificationReport rep = verify_matrix(a, opt, seed);
  rep.matrix_id = src.inline_text.empty() ? src.path : "inline";
  Output out(out_path);
  std::ostream& os = out.stream();
  if (format == "json") {
    write_report_jsonl(os, rep);
  } else if (format == "csv") {
    write_csv_header(os);
    write_csv_rows(os, rep);
  } else {
    for (const auto& [k, v] : rep.radii) os << k << " = " << estimate_text(v) << '\n';
    for (const auto& r : rep.bound_results) {
      os << r.id;
      if (!r.params.empty()) os << '(' << params_string(r.params) << ')';
      if (!r.applicable) {
        os << "  not applicable: " << r.note << '\n';
        continue;
      }
      os << "  " << to_string(r.side) << "  value " << g12(r.value.v) << "  " << r.target_name << " "
         << g12(r.target.v) << "  slack " << g12(r.slack) << '\n';
    }
    for (const auto& v : rep.violations) {
      os << "VIOLATION " << v.id << ' ' << params_string(v.params) << " slack " << g12(v.slack) << '\n';
    }
  }
  out.finish(out_path);
  return rep.violations.empty() ? kOk : kViolation;
}

struct VerifyArgs {
  std::vector<std::string> families{"ginibre"};
  std::vector<std::string> dims{"4"};
  std::size_t samples = 500;
};

int cmd_verify(const VerifyArgs& args, const HarnessOptions& opt, std::uint64_t seed, const std::string& format,
               const std::string& out_path) {
  std::vector<FamilyKind> kinds;
  for (const auto& f : split_list(args.families)) {
    if (f == "all") {
      for (FamilyKind k : all_families()) {
        if (k != FamilyKind::triangular) kinds.push_back(k);
      }
    } else {
      kinds.push_back(parse_family(f));
    }
  }
  std::vector<std::size_t> dims;
  for (const auto& d : split_list(args.dims)) {
    const auto dash = d.find('-');
    try {
      if (dash == std::string::npos) {
        dims.push_back(std::stoul(d));
      } else {
        for (std::size_t n = std::stoul(d.substr(0, dash)); n <= std::stoul(d.substr(dash + 1)); ++n) dims.push_back(n);
      }
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad dimension " + d);
    }
  }
  for (const auto& id : opt.bound_ids) find_bound(id);

  Output out(out_path);
  const bool to_file = !out_path.empty();
  if (to_file && format == "csv") write_csv_header(out.stream());
  HarnessSummary total;
  for (FamilyKind k : kinds) {
    for (std::size_t n : dims) {
      const auto reports = verify_all(MatrixFamily{k, n, seed, args.samples}, opt);
      if (to_file) {
        for (const auto& r : reports) {
          if (format == "csv") write_csv_rows(out.stream(), r);
          else write_report_jsonl(out.stream(), r);
        }
      }
      merge(total, summarize(reports));
    }
  }
  if (to_file && format != "csv") write_summary_jsonl(out.stream(), total, seed);
  out.finish(out_path);

  if (format == "json") {
    write_summary_jsonl(std::cout, total, seed);
  } else {
    std::cout << "seed " << seed << '\n'
              << "samples " << total.samples << ", evaluations " << total.evaluations << ", not applicable "
              << total.not_applicable << '\n'
              << "certified violations " << total.certified_violations << ", uncertain "
              << total.uncertain_violations << ", chain failures " << total.chain_failures << ", errors "
              << total.errors << '\n';
    for (const auto& [id, count] : total.violations_by_bound) {
      std::cout << "  " << id << ": " << count << " violations, worst excess "
                << g12(total.worst_excess_by_bound[id]) << '\n';
    }
    for (const auto& [chain, count] : total.failures_by_chain) {
      std::cout << "  chain " << chain << ": " << count << " failed links\n";
    }
  }
  return total.certified_violations == 0 ? kOk : kViolation;
}

int cmd_compare(const std::string& a, const std::string& b, std::size_t budget, std::uint64_t seed,
                const std::string& format) {
  const DominanceResult r = dominance_search(CompositeBound::parse(a), CompositeBound::parse(b), budget, seed);
  auto witness_json = [](const std::optional<DominanceWitness>& w) -> json {
    if (!w) return nullptr;
    return {{"source", w->source}, {"value_a", w->value_a}, {"value_b", w->value_b}, {"margin", w->margin},
            {"matrix", json::parse(matrix_to_json(w->matrix))}};
  };
  if (format == "json") {
    json j{{"a", r.a}, {"b", r.b}, {"sampled", r.sampled}, {"seed", seed}};
    j["a_tighter"] = witness_json(r.a_tighter);
    j["b_tighter"] = witness_json(r.b_tighter);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "seed " << seed << ", sampled " << r.sampled << '\n';
    auto show = [&](const char* label, const std::optional<DominanceWitness>& w) {
      std::cout << label << ": ";
      if (!w) {
        std::cout << "no witness\n";
        return;
      }
      std::cout << w->source << "  a " << g12(w->value_a) << "  b " << g12(w->value_b) << "  margin "
                << g12(w->margin) << '\n'
                << "  " << matrix_to_json(w->matrix) << '\n';
    };
    show((r.a + " tighter").c_str(), r.a_tighter);
    show((r.b + " tighter").c_str(), r.b_tighter);
  }
  return kOk;
}

int cmd_reproduce(const std::string& format, const std::string& out_path) {
  const ReproduceReport rep = reproduce_paper();
  Output out(out_path);
  write_reproduce(out.stream(), rep, format);
  out.finish(out_path);
  return rep.passed() ? kOk : kViolation;
}

int cmd_list_bounds() {
  json arr = json::array();
  for (const auto& s : catalog()) {
    json params = json::array();
    for (const auto& p : s.params) {
      json pj{{"name", p.name}, {"min", p.min}, {"max", p.max}, {"min_exclusive", p.min_exclusive},
              {"default_grid", p.default_grid}, {"fine_grid", p.fine_grid}};
      if (!p.choices.empty()) pj["choices"] = p.choices;
      params.push_back(pj);
    }
    arr.push_back({{"id", s.id}, {"side", std::string(to_string(s.side))}, {"params_schema", params},
                   {"operands", s.operands}, {"formula", s.formula}, {"target", s.target},
                   {"applicability", s.applicability}, {"paper_anchor", s.paper_anchor}});
  }
  std::cout << arr.dump(2) << '\n';
  return kOk;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("NUMRAD_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "NUMRAD_SEED is not an integer");
    }
  }
  return 42;
}

int exit_code(ErrorCode c) { return c == ErrorCode::IoError ? kIo : kUsage; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical radius bounds toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all commands");

  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string format = "text";
  std::string out_path;
  std::vector<std::string> bound_ids;
  std::string grid = "default";
  unsigned jobs = 1;
  MatrixSource src;
  VerifyArgs vargs;
  std::string cmp_a, cmp_b;
  std::size_t budget = 100000;

  auto add_seed = [&](CLI::App* c) {
    c->add_option_function<std::uint64_t>(
        "--seed", [&](const std::uint64_t& s) {
          seed = s;
          seed_given = true;
        }, "Master seed (default 42 or NUMRAD_SEED)");
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_bound_flags = [&](CLI::App* c) {
    c->add_option("--bounds", bound_ids, "Catalog ids (comma separated); default all");
    c->add_option("--grid", grid, "Parameter grid")->check(CLI::IsMember({"default", "fine"}));
    c->add_option("--out", out_path, "Report file");
  };

  CLI::App* eval = app.add_subcommand("eval", "Radii of a matrix with enclosures");
  src.attach(eval);
  add_format(eval);

  CLI::App* bounds = app.add_subcommand("bounds", "Every catalog bound on a matrix");
  src.attach(bounds);
  add_format(bounds);
  add_seed(bounds);
  add_bound_flags(bounds);

  CLI::App* verify = app.add_subcommand("verify", "Run the inequality harness on random families");
  verify->add_option("--family", vargs.families, "Families (comma separated, or all)");
  verify->add_option("--n", vargs.dims, "Dimensions, e.g. 4 or 2-6 or 2,3");
  verify->add_option("--samples", vargs.samples, "Samples per (family, n)");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  add_seed(verify);
  add_format(verify);
  add_bound_flags(verify);

  CLI::App* compare = app.add_subcommand("compare", "Search for matrices separating two bounds");
  compare->add_option("--a", cmp_a, "First bound, e.g. U5 or \"U7:alpha=0.5|U8:alpha=0.5\"")->required();
  compare->add_option("--b", cmp_b, "Second bound")->required();
  compare->add_option("--budget", budget, "Random matrices to sample");
  add_seed(compare);
  add_format(compare);

  CLI::App* reproduce = app.add_subcommand("reproduce", "Recompute the worked examples");
  reproduce->add_option("--out", out_path, "Table file");
  add_format(reproduce);

  CLI::App* list = app.add_subcommand("list-bounds", "Dump the catalog as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (!seed_given) seed = default_seed();
    HarnessOptions opt;
    opt.bound_ids = split_list(bound_ids);
    opt.fine_grid = grid == "fine";
    opt.jobs = jobs;

    if (*eval) return cmd_eval(src, format);
    if (*bounds) return cmd_bounds(src, opt, seed, format, out_path);
    if (*verify) return cmd_verify(vargs, opt, seed, format, out_path);
    if (*compare) return cmd_compare(cmp_a, cmp_b, budget, seed, format);
    if (*reproduce) return cmd_reproduce(format, out_path);
    if (*list) return cmd_list_bounds();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
