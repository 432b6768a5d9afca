#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "numrad/error.hpp"
#include "numrad/matrix_io.hpp"

namespace numrad {
namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t byte = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                           ": malformed JSON");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

double number(const json& v, const char* what) {
  if (!v.is_number()) throw Error(ErrorCode::ParseError, std::string("expected a number for ") + what);
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw Error(ErrorCode::InvalidMatrix, "non-finite entry");
  return d;
}

}  // namespace

ComplexMatrix parse_matrix_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows")) {
    throw Error(ErrorCode::ParseError, "expected an object with keys \"n\" and \"rows\"");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw Error(ErrorCode::ParseError, "\"n\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
  const json& rows = doc["rows"];
  if (!rows.is_array()) throw Error(ErrorCode::ParseError, "\"rows\" must be an array");
  if (rows.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(n) + " rows, got " +
                                                  std::to_string(rows.size()));
  }
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array()) throw Error(ErrorCode::ParseError, "row " + std::to_string(i) + " is not an array");
    if (row.size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                                    " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const json& e = row[j];
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::ParseError,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") must be [re, im]");
      }
      a(i, j) = cplx(number(e[0], "re"), number(e[1], "im"));
    }
  }
  return a;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix_json(ss.str());
}

ComplexMatrix parse_real_shorthand(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_array() || doc.empty()) throw Error(ErrorCode::ParseError, "expected [[a, b, ...], ...]");
  const std::size_t n = doc.size();
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!doc[i].is_array() || doc[i].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(i) + " must have " + std::to_string(n) +
                                                    " entries");
    }
    for (std::size_t j = 0; j < n; ++j) a(i, j) = number(doc[i][j], "entry");
  }
  return a;
}

std::string matrix_to_json(const ComplexMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.n(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.n(); ++j) row.push_back({a(i, j).real(), a(i, j).imag()});
    rows.push_back(row);
  }
  return json{{"n", a.n()}, {"rows", rows}}.dump();
}

}  // namespace numrad
