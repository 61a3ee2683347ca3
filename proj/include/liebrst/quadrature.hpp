#pragma once

#include <vector>

namespace liebrst {

/// Nodes and weights for ∫ e^{−t²} g(t) dt ≈ Σ w_i g(t_i).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss–Hermite rule of the given order (≥ 1), found by Newton iteration on
/// the orthonormal Hermite recurrence. Exact for polynomials of degree
/// below 2·order.
GaussRule gauss_hermite(int order);

}  // namespace liebrst
