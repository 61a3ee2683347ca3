#pragma once

#include "liebrst/rational.hpp"

#include <string>
#include <vector>

namespace liebrst {

/// Univariate polynomial over Q in the deformation parameter. Coefficients
/// are stored lowest degree first with trailing zeros trimmed, so the zero
/// polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT: implicit lift of scalars is intended
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial parameter();  // the monomial t

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t degree) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Rational operator()(const Rational& t) const;
  Polynomial derivative() const;
  Polynomial pow(unsigned exponent) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(const std::string& var = "t") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace liebrst
