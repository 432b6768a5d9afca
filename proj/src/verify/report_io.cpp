#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "numrad/error.hpp"
#include "numrad/verify.hpp"

namespace numrad {
namespace {

using nlohmann::json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json to_json(const RadiusEstimate& r) {
  json j{{"value", r.value}, {"lower_cert", r.lower_cert}, {"method", std::string(to_string(r.method))}};
  j["upper_cert"] = r.upper_cert ? json(*r.upper_cert) : json(nullptr);
  return j;
}

json to_json(const Params& p) {
  json j = json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

json to_json(const RefinementTerm& t) { return {{"value", t.value}, {"degenerate", t.degenerate}}; }

json to_json(const BoundResult& r) {
  return {{"id", r.id},
          {"params", to_json(r.params)},
          {"side", std::string(to_string(r.side))},
          {"value", r.value.v},
          {"value_lo", r.value.lo},
          {"value_hi", r.value.hi},
          {"target_name", r.target_name},
          {"target", r.target.v},
          {"target_lo", r.target.lo},
          {"target_hi", r.target.hi},
          {"slack", r.slack},
          {"applicable", r.applicable},
          {"certified", r.certified},
          {"note", r.note}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string params_string(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ';';
    out += k + "=" + g17(v);
  }
  return out;
}

void write_report_jsonl(std::ostream& os, const VerificationReport& r) {
  json j;
  j["matrix_id"] = r.matrix_id;
  j["family"] = std::string(to_string(r.family));
  j["n"] = r.n;
  j["index"] = r.index;
  j["seed"] = r.seed;
  json radii = json::object();
  for (const auto& [k, v] : r.radii) radii[k] = to_json(v);
  j["radii"] = radii;
  j["refinement_terms"] = {{"mu", to_json(r.terms.mu)},
                           {"nu", to_json(r.terms.nu)},
                           {"gamma", to_json(r.terms.gamma)},
                           {"delta", to_json(r.terms.delta)},
                           {"nu_plain", to_json(r.terms.nu_plain)},
                           {"delta_plain", to_json(r.terms.delta_plain)},
                           {"mu_hat", r.terms.mu_hat}};
  json results = json::array();
  for (const auto& b : r.bound_results) results.push_back(to_json(b));
  j["bound_results"] = results;
  json viol = json::array();
  for (const auto& v : r.violations) {
    viol.push_back({{"id", v.id}, {"params", to_json(v.params)}, {"slack", v.slack}, {"excess", v.excess},
                    {"certain", v.certain}});
  }
  j["violations"] = viol;
  json chains = json::array();
  for (const auto& c : r.chains) {
    chains.push_back({{"chain", c.chain}, {"lhs", c.lhs_name}, {"rhs", c.rhs_name}, {"lhs_value", c.lhs.v},
                      {"lhs_lo", c.lhs.lo}, {"rhs_value", c.rhs.v}, {"rhs_hi", c.rhs.hi}, {"holds", c.holds}});
  }
  j["chains"] = chains;
  json dom = json::array();
  for (const auto& d : r.dominance) {
    dom.push_back({{"a", d.a}, {"b", d.b}, {"winner", std::string(to_string(d.winner))}, {"margin", d.margin}});
  }
  j["dominance_pairs"] = dom;
  j["errors"] = r.errors;
  os << j.dump() << '\n';
}

void write_summary_jsonl(std::ostream& os, const HarnessSummary& s, std::uint64_t seed) {
  json j;
  j["summary"] = {{"seed", seed},
                  {"samples", s.samples},
                  {"evaluations", s.evaluations},
                  {"not_applicable", s.not_applicable},
                  {"certified_violations", s.certified_violations},
                  {"uncertain_violations", s.uncertain_violations},
                  {"chain_failures", s.chain_failures},
                  {"errors", s.errors},
                  {"violations_by_bound", s.violations_by_bound},
                  {"failures_by_chain", s.failures_by_chain},
                  {"worst_excess_by_bound", s.worst_excess_by_bound}};
  os << j.dump() << '\n';
}

void write_jsonl(std::ostream& os, const std::vector<VerificationReport>& reports, const HarnessSummary& summary,
                 std::uint64_t seed) {
  for (const auto& r : reports) write_report_jsonl(os, r);
  write_summary_jsonl(os, summary, seed);
}

void write_csv_header(std::ostream& os) { os << "matrix_id,bound_id,params,value,slack\n"; }

void write_csv_rows(std::ostream& os, const VerificationReport& r) {
  for (const auto& b : r.bound_results) {
    if (!b.applicable) continue;
    os << csv_field(r.matrix_id) << ',' << b.id << ',' << csv_field(params_string(b.params)) << ',' << g17(b.value.v)
       << ',' << g17(b.slack) << '\n';
  }
}

void write_reproduce(std::ostream& os, const ReproduceReport& r, std::string_view format) {
  if (format == "json") {
    json j;
    json values = json::array();
    for (const auto& c : r.values) {
      values.push_back({{"claim", c.claim}, {"paper_value", c.paper_value}, {"computed", c.computed},
                        {"delta", c.delta()}, {"tolerance", c.tolerance}, {"passed", c.passed()}});
    }
    json cmp = json::array();
    for (const auto& c : r.comparisons) {
      cmp.push_back({{"claim", c.claim}, {"left", c.left}, {"right", c.right}, {"expected_sign", c.expected},
                     {"passed", c.passed()}});
    }
    j["values"] = values;
    j["comparisons"] = cmp;
    j["passed"] = r.passed();
    os << j.dump(2) << '\n';
  } else if (format == "csv") {
    os << "claim,paper_value,computed,delta\n";
    for (const auto& c : r.values) {
      os << csv_field(c.claim) << ',' << g17(c.paper_value) << ',' << g17(c.computed) << ',' << g17(c.delta()) << '\n';
    }
    for (const auto& c : r.comparisons) {
      os << csv_field(c.claim) << ',' << (c.expected < 0 ? "<0" : ">0") << ',' << g17(c.left - c.right) << ",\n";
    }
  } else if (format == "text") {
    for (const auto& c : r.values) {
      os << (c.passed() ? "PASS " : "FAIL ") << c.claim << ": paper " << g12(c.paper_value) << ", computed "
         << g12(c.computed) << ", delta " << g12(c.delta()) << '\n';
    }
    for (const auto& c : r.comparisons) {
      os << (c.passed() ? "PASS " : "FAIL ") << c.claim << ": " << g12(c.left) << " vs " << g12(c.right) << '\n';
    }
    os << (r.passed() ? "all checks passed" : "some checks failed") << '\n';
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown format " + std::string(format));
  }
}

}  // namespace numrad
