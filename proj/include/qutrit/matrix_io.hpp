#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qutrit/complex_matrix.hpp"

namespace qutrit {

// Matrix file format: line 1 is the integer dimension, then dim lines of dim
// whitespace-separated entries. An entry is a plain decimal (real) or
// "re:im". '#' starts a comment to end of line; blank lines are ignored.

/// Throws BadHeader / BadEntryCount / BadNumber with 1-based line and column.
ComplexMatrix parse_matrix_text(std::string_view text);

/// 17 significant digits per component, so write -> parse reproduces every
/// double bit-exactly and a second write is byte-identical.
std::string format_matrix_text(const ComplexMatrix& m);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

/// Shortest-faithful formatting at the given significant digits ('%.*g',
/// C locale). CSV output uses 12.
std::string format_double(double v, int significant_digits);

}  // namespace qutrit
