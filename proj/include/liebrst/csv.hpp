#pragma once

#include "liebrst/float_linalg.hpp"
#include "liebrst/rational_matrix.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace liebrst {

// Row-major CSV. Rationals are written "p/q" (q omitted when 1), complex
// numbers "re+imi" with 17 significant digits so dumps reload losslessly.

void write_csv(std::ostream& os, const RationalMatrix& m);
void write_csv(std::ostream& os, const ComplexMatrix& m);

std::string format_complex(Complex z, int digits = 17);
Complex parse_complex(std::string_view text);

/// One matrix per blank-line separated block. Throws std::invalid_argument
/// with a line number on malformed input.
std::vector<RationalMatrix> read_rational_csv_blocks(std::istream& is);
RationalMatrix read_rational_csv(std::istream& is);
ComplexMatrix read_complex_csv(std::istream& is);

}  // namespace liebrst
