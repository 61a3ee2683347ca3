#pragma once

#include "liebrst/algebra.hpp"
#include "liebrst/signed_perm.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace liebrst {

/// Exterior algebra on n ghosts. Basis vectors are bitmasks m ∈ [0, 2^n):
/// bit i set means c^{i+1} is a factor, factors in increasing index order.
class FockBasis {
public:
  explicit FockBasis(std::size_t ghosts);

  std::size_t ghosts() const { return n_; }
  std::size_t dim() const { return std::size_t{1} << n_; }
  static std::size_t ghost_number(std::uint64_t mask);
  std::size_t stratum_dim(std::size_t k) const;
  /// Masks of ghost number k, ascending.
  std::vector<std::uint64_t> stratum(std::size_t k) const;
  /// Position of a mask inside its own stratum.
  std::size_t position_in_stratum(std::uint64_t mask) const;

private:
  std::size_t n_;
};

std::uint64_t binomial(std::size_t n, std::size_t k);

/// Left multiplication by c^{j+1} on the Fock space of n ghosts.
SignedPermMatrix creation_matrix(std::size_t j, std::size_t n);
/// Left Grassmann derivative ∂/∂c^{j+1}.
SignedPermMatrix annihilation_matrix(std::size_t j, std::size_t n);

/// The BRST operator on F ⊗ V with its Z2 grading. Basis index is
/// mask·dimV + α, masks ascending.
struct GradedMatrix {
  std::size_t ghosts = 0;
  std::size_t module_dim = 0;
  RationalMatrix q;
  std::vector<int> grading;  // diagonal of γ, (-1)^{ghost number}

  std::size_t total_dim() const { return q.rows(); }
};

std::vector<int> grading_diagonal(std::size_t n, std::size_t module_dim);
RationalMatrix grading_matrix(std::size_t n, std::size_t module_dim);

/// Q = Σ_i C^i ⊗ t_i − ½ Σ_{ijk} f_ij^k C^i C^j ∂_k ⊗ 1 assembled from monoid
/// words, with no precondition checks. Linear in the pair (f, ρ).
GradedMatrix assemble_brst(const StructureTensor& f, const Representation& rho);

/// As assemble_brst after verifying Jacobi and the representation. Throws
/// std::domain_error on failure.
GradedMatrix build_brst(const StructureTensor& f, const Representation& rho);

/// δ on degree-k cochains from the component formula, shape
/// (C(n,k+1)·dimV) x (C(n,k)·dimV) with strata ordered as in FockBasis.
/// Throws std::out_of_range for k > n.
RationalMatrix coboundary_matrix(const StructureTensor& f, const Representation& rho, std::size_t k);

/// dims[k] = dim H^k(g, V) for k = 0..n. Throws std::domain_error when
/// preconditions of build_brst fail.
std::vector<std::size_t> cohomology_dimensions(const StructureTensor& f, const Representation& rho);

bool nilpotency_check(const GradedMatrix& q);

/// γQγ == −Q.
bool is_grading_odd(const GradedMatrix& q);

/// Q maps ghost number k into k + 1 only.
bool raises_ghost_number(const GradedMatrix& q);

}  // namespace liebrst
