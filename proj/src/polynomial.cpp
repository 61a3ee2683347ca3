#include "liebrst/polynomial.hpp"

#include <algorithm>

namespace liebrst {

Polynomial::Polynomial(Rational constant)
{
  if (sgn(constant) != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
  trim();
}

Polynomial Polynomial::parameter()
{
  return Polynomial(std::vector<Rational>{0, 1});
}

void Polynomial::trim()
{
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t degree) const
{
  return degree < coeffs_.size() ? coeffs_[degree] : Rational(0);
}

Rational Polynomial::operator()(const Rational& t) const
{
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const
{
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<unsigned long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::pow(unsigned exponent) const
{
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::string Polynomial::to_string(const std::string& var) const
{
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    std::string c = liebrst::to_string(coeffs_[k]);
    if (!out.empty()) out += (c.front() == '-') ? " - " : " + ";
    else if (c.front() == '-') out += "-";
    if (c.front() == '-') c.erase(0, 1);
    if (k == 0)
      out += c;
    else {
      if (c != "1") out += c + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace liebrst
