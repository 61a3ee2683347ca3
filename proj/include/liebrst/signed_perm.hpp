#pragma once

#include "liebrst/rational_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace liebrst {

/// Element of the monoid of N x N matrices with at most one nonzero entry
/// per row and per column, every such entry being +1 or -1.
///
/// Stored column-wise: column c either is empty or holds (row, sign). The
/// constructor rejects two columns pointing at the same row, so every value
/// of this type is a genuine monoid element.
class SignedPermMatrix {
public:
  struct Entry {
    std::size_t row;
    int sign;  // +1 or -1
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SignedPermMatrix() = default;
  SignedPermMatrix(std::size_t n, std::vector<std::optional<Entry>> columns);

  static SignedPermMatrix identity(std::size_t n);
  static SignedPermMatrix zero(std::size_t n);

  /// Returns nullopt when the dense matrix is not a monoid element.
  static std::optional<SignedPermMatrix> from_dense(const RationalMatrix& m);

  std::size_t size() const { return n_; }
  const std::optional<Entry>& column(std::size_t c) const { return cols_[c]; }
  bool is_zero() const;
  bool is_invertible() const;

  RationalMatrix to_dense() const;

  friend bool operator==(const SignedPermMatrix&, const SignedPermMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::optional<Entry>> cols_;
};

/// Matrix product a*b. Throws std::invalid_argument on size mismatch.
SignedPermMatrix monoid_product(const SignedPermMatrix& a, const SignedPermMatrix& b);

inline SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b)
{
  return monoid_product(a, b);
}

}  // namespace liebrst
