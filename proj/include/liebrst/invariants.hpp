#pragma once

#include "liebrst/algebra.hpp"
#include "liebrst/float_linalg.hpp"
#include "liebrst/ghost_complex.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace liebrst {

enum class Parity { even, odd };

/// An element of the vertex algebra: a matrix on F ⊗ V that commutes (even)
/// or anticommutes (odd) with the grading.
struct VertexOperator {
  std::string label;
  ComplexMatrix matrix;
  Parity parity = Parity::even;
};

/// Validates the declared parity against γ to 1e-10. Throws
/// std::invalid_argument on mismatch or wrong shape.
VertexOperator make_vertex(std::string label, ComplexMatrix matrix, Parity parity, const std::vector<int>& grading);

namespace vertices {
VertexOperator identity(std::size_t ghosts, std::size_t module_dim);
/// Diagonal ghost-number operator, entry popcount(mask).
VertexOperator ghost_number(std::size_t ghosts, std::size_t module_dim);
VertexOperator grading(std::size_t ghosts, std::size_t module_dim);
/// Left multiplication by c^{j+1}, tensored with the identity on V.
VertexOperator creation(std::size_t j, std::size_t ghosts, std::size_t module_dim);
}  // namespace vertices

/// da = Q a − (−1)^{|a|} a Q.
ComplexMatrix graded_commutator(const ComplexMatrix& q, const VertexOperator& a);

/// A parameterized structure tensor with its exact derivative. Families are
/// the usual source; hand-built curves serve as test fixtures.
struct TensorCurve {
  std::function<StructureTensor(const Rational&)> value;
  std::function<StructureTensor(const Rational&)> derivative;
  Rational lo = 0, hi = 1;
  bool contains(const Rational& t) const { return lo <= t && t <= hi; }
};

TensorCurve curve_of(const DeformationFamily& family);

/// How the module follows the algebra along a deformation.
struct RhoRule {
  enum class Kind { fixed, adjoint_at_parameter };
  Kind kind = Kind::adjoint_at_parameter;
  Representation fixed;  // used when kind == fixed

  static RhoRule adjoint() { return {Kind::adjoint_at_parameter, {}}; }
  static RhoRule fixed_representation(Representation rho) { return {Kind::fixed, std::move(rho)}; }
};

Representation representation_at(const RhoRule& rule, const StructureTensor& f);
std::size_t module_dim(const RhoRule& rule, std::size_t algebra_dim);

/// Q(λ) from the curve and rule, without precondition checks.
GradedMatrix brst_at(const TensorCurve& curve, const RhoRule& rule, const Rational& lambda);
/// dQ/dλ, exact: assemble_brst is linear in (f, t).
RationalMatrix brst_derivative_at(const TensorCurve& curve, const RhoRule& rule, const Rational& lambda);

/// W = Q(λ) − Q(λ0). Throws std::out_of_range when either point is outside.
RationalMatrix perturbation(const TensorCurve& curve, const RhoRule& rule, const Rational& lambda,
                            const Rational& lambda0);
RationalMatrix perturbation(const DeformationFamily& family, const RhoRule& rule, const Rational& lambda,
                            const Rational& lambda0);

struct HypothesesReport {
  std::vector<Rational> grid;  // grid.front() is the base point λ0

  // 1: Q(λ)² = 0 and γQγ = −Q at every grid point; symmetry is a diagnostic.
  bool nilpotent = true;
  bool grading_odd = true;
  double symmetry_defect = 0.0;  // max ‖Q − Qᵀ‖
  bool self_adjoint = true;

  // 2: Q(λ) = Q + W(λ).
  double max_w_norm = 0.0;
  bool w_symmetric = true;

  // 3: W² ≤ aQ² + b with a = 0.
  double a = 0.0;
  double b = 0.0;
  double sup_w_norm_sq = 0.0;
  double min_anticommutator_eigen = 0.0;  // min over grid of E_min of symmetrized {Q(λ), Q(λ0)}
  bool h3_ok = false;

  // 4: difference quotient against the exact derivative.
  std::vector<double> separations;
  std::vector<double> deviations;  // max over grid, one per separation
  std::vector<double> ratios;
  bool h4_ok = false;

  // 5: ‖d_λ a‖ ≤ M with α = β = 0.
  double m_bound = 0.0;

  bool h1_pass() const { return nilpotent && grading_odd && self_adjoint; }
};

/// Throws std::invalid_argument for an empty or non-ascending grid and
/// std::out_of_range for points outside the curve's interval.
HypothesesReport check_hypotheses(const TensorCurve& curve, const RhoRule& rule, std::span<const Rational> grid,
                                  const VertexOperator& a);
HypothesesReport check_hypotheses(const DeformationFamily& family, const RhoRule& rule,
                                  std::span<const Rational> grid, const VertexOperator& a);

struct IndexResult {
  enum class Method { quadrature, series };
  Complex value;
  Method method = Method::quadrature;
  int order = 0;  // quadrature order, or number of series terms used
  double error_estimate = 0.0;
  bool converged = true;
};

enum class IntegrandSign { plus, minus };

/// (1/√π) ∫ e^{−t²} Tr(γ a e^{±it·da}) dt with trivial U(g); e^{−Q²} = 1.
/// Error estimate compares against twice the order. Throws
/// std::invalid_argument for order < 2 and std::domain_error if Q² ≠ 0.
IndexResult equivariant_index(const GradedMatrix& q, const VertexOperator& a, int order = 64,
                              IntegrandSign sign = IntegrandSign::plus);

/// Same quantity as Σ_m (−1)^m Tr(γ a da^{2m}) / (4^m m!).
IndexResult index_series_oracle(const GradedMatrix& q, const VertexOperator& a, double tol = 1e-13);

/// (β^n / n!) Tr(γ a_0 da_1 ⋯ da_n). Throws std::invalid_argument for β ≤ 0
/// or an empty vertex list, std::domain_error if Q² ≠ 0.
Complex jlo_component(const GradedMatrix& q, std::span<const VertexOperator> vertices, double beta);

struct JordanProfile {
  std::size_t total_dim = 0;
  std::size_t rank = 0;
  std::size_t blocks_size2 = 0;
  std::size_t blocks_size1 = 0;
  friend bool operator==(const JordanProfile&, const JordanProfile&) = default;
};

/// Throws std::domain_error unless Q² = 0 exactly.
JordanProfile jordan_profile(const RationalMatrix& q);
JordanProfile jordan_profile(const GradedMatrix& q);

struct ScanRow {
  Rational lambda;
  std::size_t rank = 0;
  Complex index;
  double index_error = 0.0;
  bool nilpotent = false;
  bool grading_odd = false;
};

struct ScanTable {
  std::vector<ScanRow> rows;  // ordered as the grid
  double max_index_deviation = 0.0;
  bool rank_constant = true;
};

/// One row per grid point, evaluated concurrently. Rows where Q(λ)² ≠ 0
/// carry a NaN index.
ScanTable deformation_scan(const TensorCurve& curve, const RhoRule& rule, std::span<const Rational> grid,
                           const VertexOperator& a, int order = 64);
ScanTable deformation_scan(const DeformationFamily& family, const RhoRule& rule, std::span<const Rational> grid,
                           const VertexOperator& a, int order = 64);

}  // namespace liebrst
