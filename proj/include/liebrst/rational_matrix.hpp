#pragma once

#include "liebrst/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace liebrst {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q. 0x0 is a legal value.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Rational>& entries() const { return data_; }

  bool is_zero() const;
  RationalMatrix transpose() const;
  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& scalar);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(RationalMatrix a, const Rational& s);
RationalMatrix operator*(const Rational& s, RationalMatrix a);
RationalVector operator*(const RationalMatrix& a, const RationalVector& v);

/// a*b - b*a
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

/// Kronecker product, (a ⊗ b)(i*rb + k, j*cb + l) = a(i,j) b(k,l).
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

/// Exact rank via fraction-free (Bareiss) elimination on an integer image
/// of the matrix. Pivots are chosen per column by smallest bit length.
std::size_t rank_exact(const RationalMatrix& m);

/// Basis of the right null space; size equals cols - rank.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

/// Throws std::domain_error when the matrix is singular.
RationalMatrix inverse(const RationalMatrix& m);

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

}  // namespace liebrst
