#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include <numeric>

using namespace liebrst;

namespace {

RationalMatrix stratum_block(const GradedMatrix& q, std::size_t k)
{
  const FockBasis basis(q.ghosts);
  const auto rows = basis.stratum(k + 1), cols = basis.stratum(k);
  const std::size_t d = q.module_dim;
  RationalMatrix out(rows.size() * d, cols.size() * d);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) out(r * d + a, c * d + b) = q.q(rows[r] * d + a, cols[c] * d + b);
  return out;
}

std::vector<std::pair<StructureTensor, Representation>> valid_pairs()
{
  std::vector<std::pair<StructureTensor, Representation>> out;
  for (const auto& f : oracle::catalogue()) {
    out.emplace_back(f, Representation::trivial(f.dim(), 1));
    out.emplace_back(f, Representation::trivial(f.dim(), 2));
    out.emplace_back(f, adjoint_representation(f));
  }
  out.emplace_back(algebras::sl2(),
                   Representation{2,
                                  {RationalMatrix::from_rows({{1, 0}, {0, -1}}), RationalMatrix::from_rows({{0, 1}, {0, 0}}),
                                   RationalMatrix::from_rows({{0, 0}, {1, 0}})}});
  return out;
}

}  // namespace

TEST_CASE("Fock space counting")
{
  for (std::size_t n = 0; n <= 8; ++n) {
    const FockBasis basis(n);
    CHECK(basis.dim() == (std::size_t{1} << n));
    std::size_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      const auto s = basis.stratum(k);
      CHECK(s.size() == basis.stratum_dim(k));
      CHECK(s.size() == binomial(n, k));
      CHECK(std::is_sorted(s.begin(), s.end()));
      for (std::size_t p = 0; p < s.size(); ++p) {
        CHECK(FockBasis::ghost_number(s[p]) == k);
        CHECK(basis.position_in_stratum(s[p]) == p);
      }
      total += s.size();
    }
    CHECK(total == basis.dim());
  }
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("creation and annihilation operators")
{
  SUBCASE("n = 1")
  {
    const auto c = creation_matrix(0, 1).to_dense();
    CHECK(c == RationalMatrix::from_rows({{0, 0}, {1, 0}}));
    const auto d = annihilation_matrix(0, 1).to_dense();
    CHECK(d == RationalMatrix::from_rows({{0, 1}, {0, 0}}));
    // ∂1 C1 projects onto the empty word.
    CHECK((annihilation_matrix(0, 1) * creation_matrix(0, 1)).to_dense() == RationalMatrix::from_rows({{1, 0}, {0, 0}}));
    CHECK((creation_matrix(0, 1) * creation_matrix(0, 1)).is_zero());
  }
  SUBCASE("n = 2 signs")
  {
    // c2 · c1 = −c1 c2: column of mask 0b01 maps to row 0b11 with sign −1.
    const auto c2 = creation_matrix(1, 2);
    REQUIRE(c2.column(0b01).has_value());
    CHECK(c2.column(0b01)->row == 0b11);
    CHECK(c2.column(0b01)->sign == -1);
    // ∂2(c1 c2) = −c1
    const auto d2 = annihilation_matrix(1, 2);
    REQUIRE(d2.column(0b11).has_value());
    CHECK(d2.column(0b11)->row == 0b01);
    CHECK(d2.column(0b11)->sign == -1);
    CHECK_FALSE(d2.column(0b01).has_value());
  }
  CHECK_THROWS_AS(creation_matrix(3, 3), std::out_of_range);
  CHECK_THROWS_AS(annihilation_matrix(2, 2), std::out_of_range);
}

TEST_CASE("canonical anticommutation relations")
{
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t N = std::size_t{1} << n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto ci = creation_matrix(i, n).to_dense(), cj = creation_matrix(j, n).to_dense();
        const auto di = annihilation_matrix(i, n).to_dense();
        CHECK((ci * cj + cj * ci).is_zero());
        const auto anti = di * cj + cj * di;
        CHECK(anti == (i == j ? RationalMatrix::identity(N) : RationalMatrix(N, N)));
      }
  }
}

TEST_CASE("random words stay in the monoid")
{
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform_int(1, 5));
    const auto length = oracle::uniform_int(1, 12);
    auto word = SignedPermMatrix::identity(std::size_t{1} << n);
    RationalMatrix dense = RationalMatrix::identity(std::size_t{1} << n);
    for (long l = 0; l < length; ++l) {
      const auto j = static_cast<std::size_t>(oracle::uniform_int(0, static_cast<long>(n) - 1));
      const auto g = oracle::uniform_int(0, 1) ? creation_matrix(j, n) : annihilation_matrix(j, n);
      word = word * g;
      dense = dense * g.to_dense();
    }
    CHECK(word.to_dense() == dense);
    CHECK(SignedPermMatrix::from_dense(dense).has_value());
  }
}

TEST_CASE("grading")
{
  CHECK(grading_matrix(0, 1) == RationalMatrix::identity(1));
  CHECK(grading_matrix(1, 1) == RationalMatrix::from_rows({{1, 0}, {0, -1}}));
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto g = grading_diagonal(n, d);
      CHECK(std::accumulate(g.begin(), g.end(), 0) == 0);
      CHECK(g.size() == (std::size_t{1} << n) * d);
    }
  const auto g = grading_diagonal(2, 2);
  CHECK(g == std::vector<int>{1, 1, -1, -1, -1, -1, 1, 1});
}

TEST_CASE("BRST operator")
{
  SUBCASE("abelian with trivial module is zero")
  {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(build_brst(algebras::abelian(n), Representation::trivial(n, 1)).q.is_zero());
  }
  SUBCASE("three-dimensional adjoint case has dimension 24")
  {
    const auto f = evaluate_family(builtin_family_ni2(1, 1, 1), 0);
    const auto q = build_brst(f, adjoint_representation(f));
    CHECK(q.total_dim() == 24);
    CHECK(nilpotency_check(q));
  }
  SUBCASE("agrees with the Grassmann-word expansion")
  {
    for (const auto& [f, rho] : valid_pairs()) CHECK(build_brst(f, rho).q == oracle::brst_by_words(f, rho));
  }
  SUBCASE("structure: nilpotent, odd, raises ghost number")
  {
    for (const auto& [f, rho] : valid_pairs()) {
      const auto q = build_brst(f, rho);
      CHECK(nilpotency_check(q));
      CHECK(is_grading_odd(q));
      CHECK(raises_ghost_number(q));
      CHECK(q.total_dim() >= 2 * rank_exact(q.q));
    }
  }
  SUBCASE("a Jacobi-violating tensor gives Q^2 != 0")
  {
    // One slot of so(3) set to 2: f_12^3 = 2 but f_21^3 = -1.
    auto f = algebras::so3();
    f.set_component(0, 1, 2, 2);
    CHECK_FALSE(jacobi_check(f).ok);
    CHECK_FALSE(nilpotency_check(assemble_brst(f, adjoint_matrices(f))));
    CHECK_THROWS_AS(build_brst(f, Representation::trivial(3, 1)), std::domain_error);

    const auto g = oracle::direct_tensor(3, {{1, 2, 1, 1}, {1, 3, 2, 1}});
    CHECK_FALSE(nilpotency_check(assemble_brst(g, Representation::trivial(3, 1))));
    CHECK_FALSE(nilpotency_check(assemble_brst(g, adjoint_matrices(g))));
  }
  SUBCASE("bad representation is rejected")
  {
    Representation ids{1, {RationalMatrix::identity(1), RationalMatrix::identity(1), RationalMatrix::identity(1)}};
    CHECK_THROWS_AS(build_brst(algebras::so3(), ids), std::domain_error);
  }
  SUBCASE("Q = 0 is nilpotent")
  {
    GradedMatrix zero{2, 1, RationalMatrix(4, 4), grading_diagonal(2, 1)};
    CHECK(nilpotency_check(zero));
  }
}

TEST_CASE("coboundary matrices")
{
  SUBCASE("abelian with trivial module")
  {
    for (std::size_t k = 0; k <= 3; ++k) CHECK(coboundary_matrix(algebras::abelian(3), Representation::trivial(3, 1), k).is_zero());
  }
  SUBCASE("so(3) degree one has rank 3")
  {
    const auto d1 = coboundary_matrix(algebras::so3(), Representation::trivial(3, 1), 1);
    CHECK(d1.rows() == 3);
    CHECK(d1.cols() == 3);
    CHECK(rank_exact(d1) == 3);
  }
  SUBCASE("shapes, square zero, and agreement with blocks of Q")
  {
    for (const auto& [f, rho] : valid_pairs()) {
      const std::size_t n = f.dim(), d = rho.module_dim;
      const auto q = build_brst(f, rho);
      for (std::size_t k = 0; k <= n; ++k) {
        const auto dk = coboundary_matrix(f, rho, k);
        CHECK(dk.rows() == binomial(n, k + 1) * d);
        CHECK(dk.cols() == binomial(n, k) * d);
        if (k < n) {
          CHECK(dk == stratum_block(q, k));
          CHECK((coboundary_matrix(f, rho, k + 1) * dk).is_zero());
        }
      }
    }
  }
  CHECK_THROWS_AS(coboundary_matrix(algebras::so3(), Representation::trivial(3, 1), 4), std::out_of_range);
}

TEST_CASE("cohomology")
{
  using Dims = std::vector<std::size_t>;
  CHECK(cohomology_dimensions(algebras::abelian(3), Representation::trivial(3, 1)) == Dims{1, 3, 3, 1});
  CHECK(cohomology_dimensions(algebras::so3(), Representation::trivial(3, 1)) == Dims{1, 0, 0, 1});
  CHECK(cohomology_dimensions(algebras::so3(), adjoint_representation(algebras::so3())) == Dims{0, 0, 0, 0});
  CHECK(cohomology_dimensions(algebras::sl2(), Representation::trivial(3, 1)) == Dims{1, 0, 0, 1});
  // Heisenberg: b = (1, 2, 2, 1).
  CHECK(cohomology_dimensions(algebras::heisenberg(), Representation::trivial(3, 1)) == Dims{1, 2, 2, 1});

  SUBCASE("Euler characteristic vanishes")
  {
    for (const auto& [f, rho] : valid_pairs()) {
      const auto dims = cohomology_dimensions(f, rho);
      long chi = 0;
      for (std::size_t k = 0; k < dims.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(dims[k]);
      CHECK(chi == 0);
    }
  }
  SUBCASE("invariant under change of basis with transported module")
  {
    for (const auto& [f, rho] : valid_pairs()) {
      const auto dims = cohomology_dimensions(f, rho);
      const auto a = oracle::random_invertible(f.dim());
      const auto g = gl_transform(f, a);
      const auto moved = transport_representation(rho, a);
      CHECK(representation_check(g, moved));
      CHECK(cohomology_dimensions(g, moved) == dims);
      CHECK(rank_exact(build_brst(g, moved).q) == rank_exact(build_brst(f, rho).q));
    }
  }
}
