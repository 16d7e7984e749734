#pragma once

#include "spinstat/matrix.hpp"

#include <string>
#include <string_view>

namespace spinstat {

/// Canonical serialization: a JSON array of rows, each an array of scalar
/// strings in Scalar::str() form, no whitespace. `[["0+1i","1+0i"]]`.
std::string matrix_to_text(const ExactMatrix& m);

/// Parses nested arrays of scalar strings. Numbers in place of strings are
/// accepted when they are integers. Throws FormatError.
ExactMatrix matrix_from_text(std::string_view text);

ExactMatrix read_matrix_file(const std::string& path);

}  // namespace spinstat
