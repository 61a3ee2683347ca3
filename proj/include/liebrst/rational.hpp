#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace liebrst {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q", or a finite decimal such as "-0.25". Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Bits needed for numerator and denominator together, used to rank pivots.
std::size_t bit_length(const Rational& value);
std::size_t bit_length(const Integer& value);

double to_double(const Rational& value);

}  // namespace liebrst
