#pragma once

#include "liebrst/algebra.hpp"

#include <array>
#include <optional>
#include <string>

namespace liebrst {

/// The pair (n, a) with f_ij^k = ε_ijl (n^{lk} + ε^{lkm} a_m).
struct BehrData {
  RationalMatrix n = RationalMatrix(3, 3);  // symmetric
  std::array<Rational, 3> a{};

  /// n symmetric and n·a = 0.
  bool valid() const;
  friend bool operator==(const BehrData&, const BehrData&) = default;
};

struct BianchiLabel {
  std::size_t rank = 0;
  std::size_t positive = 0, negative = 0, zero = 0;
  bool a_zero = true;
  std::optional<Rational> h;  // class parameter of VI_h / VII_h
  std::string label;          // "I", "II", ..., "VI_h", "VII_h", "VIII", "IX"
};

/// Inverts the parameterization: a_i = −½ f_ik^k and
/// n^{mk} = ¼ (ε^{mij} f_ij^k + ε^{kij} f_ij^m). Throws std::invalid_argument
/// for dim ≠ 3 and std::domain_error when Jacobi fails.
BehrData extract_na(const StructureTensor& f);

/// Throws std::domain_error when n is not symmetric or n·a ≠ 0.
StructureTensor assemble_from_na(const BehrData& d);

/// Exact inertia of n from the sign pattern of its characteristic
/// polynomial, then the fixed Bianchi–Behr table.
BianchiLabel bianchi_signature(const BehrData& d);

}  // namespace liebrst
