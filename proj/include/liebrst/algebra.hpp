#pragma once

#include "liebrst/polynomial.hpp"
#include "liebrst/rational_matrix.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace liebrst {

// Indices in this API are zero-based: component(i, j, k) is the coefficient
// of E_k in [E_i, E_j]. The .alg input format and CLI output are one-based.

/// Structure constants f_ij^k of an n-dimensional bracket. Both f_ij^k and
/// f_ji^k are stored; set_bracket keeps them antisymmetric and
/// set_component writes a single slot (used to build corrupted fixtures).
class StructureTensor {
public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Rational& component(std::size_t i, std::size_t j, std::size_t k) const { return data_[index(i, j, k)]; }
  void set_component(std::size_t i, std::size_t j, std::size_t k, Rational value);
  /// Sets [E_i, E_j] ∋ value·E_k and the antisymmetric partner.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

  /// Coordinates of [x, y] for coordinate vectors x, y.
  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;

  bool is_abelian() const;
  StructureTensor& operator*=(const Rational& s);

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

StructureTensor operator+(const StructureTensor& a, const StructureTensor& b);

namespace algebras {
StructureTensor abelian(std::size_t n);
/// [e1, e2] = e3
StructureTensor heisenberg();
/// f_ij^k = ε_ijk
StructureTensor so3();
/// Basis (H, E, F): [H,E] = 2E, [H,F] = -2F, [E,F] = H.
StructureTensor sl2();
}  // namespace algebras

/// Matrices t_i (dimV x dimV), row index = output component.
struct Representation {
  std::size_t module_dim = 0;
  std::vector<RationalMatrix> generators;

  static Representation trivial(std::size_t algebra_dim, std::size_t module_dim);
  friend bool operator==(const Representation&, const Representation&) = default;
};

struct JacobiViolation {
  enum class Kind { antisymmetry, jacobi };
  Kind kind;
  std::size_t i, j, k;
  std::size_t m;  // upper index of the cyclic sum; equals k for antisymmetry

  friend bool operator==(const JacobiViolation&, const JacobiViolation&) = default;
};

struct JacobiReport {
  bool ok = true;
  std::vector<JacobiViolation> violations;
};

/// Checks f_ij^k + f_ji^k = 0 and the cyclic sum
/// f_ij^l f_lk^m + f_jk^l f_li^m + f_ki^l f_lj^m = 0 for all i < j < k, m.
JacobiReport jacobi_check(const StructureTensor& f);

/// Change of basis E'_i = A^f_i E_f. Throws std::domain_error for singular A.
StructureTensor gl_transform(const StructureTensor& f, const RationalMatrix& a);

/// t'_i = A^f_i t_f, the representation seen from the transformed basis.
Representation transport_representation(const Representation& rho, const RationalMatrix& a);

/// (t_i)(k, j) = f_ij^k. Throws std::domain_error when Jacobi fails.
Representation adjoint_representation(const StructureTensor& f);
/// Same matrices without the Jacobi precondition.
Representation adjoint_matrices(const StructureTensor& f);

/// [t_i, t_j] == f_ij^k t_k for all i < j. Throws std::invalid_argument
/// when the generator count or shapes do not match.
bool representation_check(const StructureTensor& f, const Representation& rho);

/// g ⋉_b h on g ⊕ h (g basis first). b holds one dim(h) x dim(h) matrix per
/// basis element of g. Throws std::invalid_argument naming the offending
/// pair when some b(X_i) is not a derivation or b is not a homomorphism.
StructureTensor semidirect_product(const StructureTensor& g, const StructureTensor& h,
                                   const std::vector<RationalMatrix>& b);

struct DerivationSpace {
  std::size_t dimension = 0;
  std::vector<RationalMatrix> basis;
};

bool is_derivation(const StructureTensor& f, const RationalMatrix& d);
DerivationSpace derivation_space(const StructureTensor& f);

/// Structure constants polynomial in one parameter over the interval [lo, hi].
class DeformationFamily {
public:
  DeformationFamily() = default;
  DeformationFamily(std::size_t dim, std::string parameter, Rational lo, Rational hi);

  std::size_t dim() const { return dim_; }
  const std::string& parameter() const { return parameter_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool contains(const Rational& t) const { return lo_ <= t && t <= hi_; }

  const Polynomial& component(std::size_t i, std::size_t j, std::size_t k) const { return data_[index(i, j, k)]; }
  void set_component(std::size_t i, std::size_t j, std::size_t k, Polynomial p);
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Polynomial& p);

  bool is_constant() const;
  /// Coefficient-wise antisymmetry.
  bool is_antisymmetric() const;

  /// Componentwise derivative at t (not itself a Lie bracket in general).
  StructureTensor derivative_at(const Rational& t) const;

  friend bool operator==(const DeformationFamily&, const DeformationFamily&) = default;

private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }
  std::size_t dim_ = 0;
  std::string parameter_ = "t";
  Rational lo_ = 0, hi_ = 1;
  std::vector<Polynomial> data_;
};

DeformationFamily constant_family(const StructureTensor& f, Rational lo = 0, Rational hi = 1);

/// Throws std::out_of_range when t0 lies outside the family's interval.
StructureTensor evaluate_family(const DeformationFamily& family, const Rational& t0);

/// [e1,e2] = (1+t)λ e2, [e1,e3] = (1+t+αt²)μ e3, [e2,e3] = 0 on t ∈ [0, 1].
/// Throws std::invalid_argument unless λ ≠ 0, μ ≠ 0, α > 0.
DeformationFamily builtin_family_ni2(const Rational& lambda, const Rational& mu, const Rational& alpha);

/// For a 3-dim algebra where span(e2, e3) is an abelian ideal on which
/// ad(e1) acts as diag(d2, d3), d2·d3 ≠ 0: returns {d2/d3, d3/d2} sorted
/// ascending. Throws std::invalid_argument when the shape does not match.
std::pair<Rational, Rational> solvable_ratio_invariant(const StructureTensor& f);

}  // namespace liebrst
