#include "liebrst/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace liebrst {

namespace {

bool all_digits(std::string_view s)
{
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto p = s.substr(0, slash);
    auto q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer den(std::string(q), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    result = Rational(Integer(std::string(p), 10), den);
    result.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    std::string digits = std::string(whole) + std::string(frac);
    Integer num(digits.empty() ? std::string("0") : digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    result = Rational(num, den);
    result.canonicalize();
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    result = Rational(Integer(std::string(s), 10));
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value)
{
  // mpq_class(p, q) does not reduce on construction.
  Rational copy = value;
  copy.canonicalize();
  return copy.get_str(10);
}

std::size_t bit_length(const Integer& value)
{
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

std::size_t bit_length(const Rational& value)
{
  return bit_length(value.get_num()) + bit_length(value.get_den());
}

double to_double(const Rational& value)
{
  return value.get_d();
}

}  // namespace liebrst
