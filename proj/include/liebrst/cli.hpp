#pragma once

#include "liebrst/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace liebrst::cli {

enum ExitCode { ok = 0, math_failure = 1, input_error = 2 };

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a:b:k" → k equally spaced exact samples from a to b; k = 1 gives {a}.
/// Throws std::invalid_argument on malformed input.
std::vector<Rational> parse_grid(std::string_view spec);

}  // namespace liebrst::cli
