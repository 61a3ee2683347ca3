#include "liebrst/rational_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace liebrst {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
  if (data_.size() != rows * cols) throw std::invalid_argument("RationalMatrix: entry count does not match shape");
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("RationalMatrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool RationalMatrix::is_zero() const
{
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RationalMatrix RationalMatrix::transpose() const
{
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("RationalMatrix::block out of range");
  RationalMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other)
{
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("RationalMatrix: shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other)
{
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("RationalMatrix: shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar)
{
  for (auto& x : data_) x *= scalar;
  return *this;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b)
{
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }

RationalMatrix operator-(RationalMatrix a)
{
  a *= Rational(-1);
  return a;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
  if (a.cols() != b.rows()) throw std::invalid_argument("RationalMatrix: shape mismatch in *");
  RationalMatrix c(a.rows(), b.cols());
  Rational tmp;
  // Operators here are mostly sparse; skipping zero factors dominates the cost.
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        tmp = aik * bkj;
        c(i, j) += tmp;
      }
    }
  return c;
}

RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }

RationalVector operator*(const RationalMatrix& a, const RationalVector& v)
{
  if (a.cols() != v.size()) throw std::invalid_argument("RationalMatrix: shape mismatch in matrix*vector");
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
  return out;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b)
{
  return a * b - b * a;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b)
{
  RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return k;
}

namespace {

struct IntegerEchelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivot_cols;
};

// Each row is scaled by the lcm of its denominators, which leaves the row
// space unchanged, then reduced by Bareiss steps. Division by the previous
// pivot is exact at every step.
IntegerEchelon fraction_free_echelon(const RationalMatrix& m)
{
  IntegerEchelon e;
  const std::size_t nr = m.rows(), nc = m.cols();
  e.rows.assign(nr, std::vector<Integer>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < nc; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < nc; ++j) e.rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }

  auto& a = e.rows;
  Integer prev = 1;
  Integer t1, t2;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t best = nr;
    std::size_t best_bits = 0;
    for (std::size_t p = r; p < nr; ++p) {
      if (sgn(a[p][c]) == 0) continue;
      const std::size_t bits = bit_length(a[p][c]);
      if (best == nr || bits < best_bits) {
        best = p;
        best_bits = bits;
      }
    }
    if (best == nr) continue;
    std::swap(a[r], a[best]);
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < nr; ++i) {
      const Integer lead = a[i][c];
      for (std::size_t j = c + 1; j < nc; ++j) {
        t1 = piv * a[i][j];
        t2 = lead * a[r][j];
        t1 -= t2;
        mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::size_t rank_exact(const RationalMatrix& m)
{
  return fraction_free_echelon(m).pivot_cols.size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m)
{
  const IntegerEchelon e = fraction_free_echelon(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(nc);
    x[free] = 1;
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      const auto& row = e.rows[k];
      Rational sum = 0;
      for (std::size_t j = pc + 1; j < nc; ++j)
        if (sgn(row[j]) != 0 && sgn(x[j]) != 0) sum += Rational(row[j]) * x[j];
      x[pc] = -sum / Rational(row[pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Rational determinant(const RationalMatrix& m)
{
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational factor = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m)
{
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) throw std::domain_error("inverse: matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const Rational scale = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      const Rational factor = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(c, j);
        inv(i, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m)
{
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << ']';
}

}  // namespace liebrst
