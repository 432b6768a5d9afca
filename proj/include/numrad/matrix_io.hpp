#pragma once

#include <string>
#include <string_view>

#include "numrad/complex_matrix.hpp"

namespace numrad {

/// Parses {"n": N, "rows": [[[re, im], ...], ...]}. Throws ParseError with
/// the line and column of malformed JSON, DimensionMismatch when the shape
/// disagrees with n, InvalidMatrix for non-finite entries.
ComplexMatrix parse_matrix_json(std::string_view text);
/// Reads and parses a matrix file. Throws IoError if it cannot be read.
ComplexMatrix read_matrix_file(const std::string& path);
/// Inline real shorthand "[[0,1],[0,0]]".
ComplexMatrix parse_real_shorthand(std::string_view text);

std::string matrix_to_json(const ComplexMatrix& a);

}  // namespace numrad
