#include "liebrst/signed_perm.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace liebrst {

SignedPermMatrix::SignedPermMatrix(std::size_t n, std::vector<std::optional<Entry>> columns)
    : n_(n), cols_(std::move(columns))
{
  if (cols_.size() != n_) throw std::invalid_argument("SignedPermMatrix: column count must equal size");
  std::vector<bool> used(n_, false);
  for (const auto& e : cols_) {
    if (!e) continue;
    if (e->row >= n_) throw std::invalid_argument("SignedPermMatrix: row index out of range");
    if (e->sign != 1 && e->sign != -1) throw std::invalid_argument("SignedPermMatrix: entries must be +1 or -1");
    if (used[e->row])
      throw std::invalid_argument("SignedPermMatrix: row " + std::to_string(e->row) + " has two entries");
    used[e->row] = true;
  }
}

SignedPermMatrix SignedPermMatrix::identity(std::size_t n)
{
  std::vector<std::optional<Entry>> cols(n);
  for (std::size_t c = 0; c < n; ++c) cols[c] = Entry{c, 1};
  return SignedPermMatrix(n, std::move(cols));
}

SignedPermMatrix SignedPermMatrix::zero(std::size_t n)
{
  return SignedPermMatrix(n, std::vector<std::optional<Entry>>(n));
}

std::optional<SignedPermMatrix> SignedPermMatrix::from_dense(const RationalMatrix& m)
{
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<std::optional<Entry>> cols(n);
  std::vector<bool> used(n, false);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) {
      const Rational& x = m(r, c);
      if (sgn(x) == 0) continue;
      if (cols[c] || used[r]) return std::nullopt;
      if (x == 1)
        cols[c] = Entry{r, 1};
      else if (x == -1)
        cols[c] = Entry{r, -1};
      else
        return std::nullopt;
      used[r] = true;
    }
  return SignedPermMatrix(n, std::move(cols));
}

bool SignedPermMatrix::is_zero() const
{
  return std::none_of(cols_.begin(), cols_.end(), [](const auto& e) { return e.has_value(); });
}

bool SignedPermMatrix::is_invertible() const
{
  return std::all_of(cols_.begin(), cols_.end(), [](const auto& e) { return e.has_value(); });
}

RationalMatrix SignedPermMatrix::to_dense() const
{
  RationalMatrix m(n_, n_);
  for (std::size_t c = 0; c < n_; ++c)
    if (cols_[c]) m(cols_[c]->row, c) = cols_[c]->sign;
  return m;
}

SignedPermMatrix monoid_product(const SignedPermMatrix& a, const SignedPermMatrix& b)
{
  if (a.size() != b.size()) throw std::invalid_argument("monoid_product: size mismatch");
  const std::size_t n = a.size();
  std::vector<std::optional<SignedPermMatrix::Entry>> cols(n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto& eb = b.column(c);
    if (!eb) continue;
    const auto& ea = a.column(eb->row);
    if (!ea) continue;
    cols[c] = SignedPermMatrix::Entry{ea->row, ea->sign * eb->sign};
  }
  return SignedPermMatrix(n, std::move(cols));
}

}  // namespace liebrst
