#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include <set>

using namespace liebrst;
using oracle::frac;

namespace {

/// Jacobi by brute force on coordinate vectors: [x,[y,z]] + [y,[z,x]] + [z,[x,y]].
bool jacobi_by_vectors(const StructureTensor& f)
{
  const std::size_t n = f.dim();
  auto e = [n](std::size_t i) {
    RationalVector v(n);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (f.bracket(e(i), e(j)) != [&] {
            auto v = f.bracket(e(j), e(i));
            for (auto& x : v) x = -x;
            return v;
          }())
        return false;
      for (std::size_t k = 0; k < n; ++k) {
        auto a = f.bracket(e(i), f.bracket(e(j), e(k)));
        auto b = f.bracket(e(j), f.bracket(e(k), e(i)));
        auto c = f.bracket(e(k), f.bracket(e(i), e(j)));
        for (std::size_t m = 0; m < n; ++m)
          if (sgn(a[m] + b[m] + c[m]) != 0) return false;
      }
    }
  return true;
}

/// Transforms through the bracket itself: f'_ij^k = (A⁻¹ [A e_i, A e_j])_k.
StructureTensor transform_by_vectors(const StructureTensor& f, const RationalMatrix& a)
{
  const std::size_t n = f.dim();
  const RationalMatrix ainv = inverse(a);
  StructureTensor out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector x(n), y(n);
      for (std::size_t r = 0; r < n; ++r) {
        x[r] = a(r, i);
        y[r] = a(r, j);
      }
      const RationalVector img = ainv * f.bracket(x, y);
      for (std::size_t k = 0; k < n; ++k) out.set_component(i, j, k, img[k]);
    }
  return out;
}

}  // namespace

TEST_CASE("jacobi_check")
{
  for (std::size_t n = 1; n <= 5; ++n) CHECK(jacobi_check(algebras::abelian(n)).ok);
  CHECK(jacobi_check(algebras::so3()).ok);
  CHECK(jacobi_check(algebras::sl2()).ok);
  CHECK(jacobi_check(algebras::heisenberg()).ok);

  SUBCASE("only f_12^1 = f_13^2 = 1 violates at (1,2,3)")
  {
    const auto f = oracle::direct_tensor(3, {{1, 2, 1, 1}, {1, 3, 2, 1}});
    const auto r = jacobi_check(f);
    REQUIRE_FALSE(r.ok);
    bool found = false;
    for (const auto& v : r.violations)
      if (v.kind == JacobiViolation::Kind::jacobi && v.i == 0 && v.j == 1 && v.k == 2) found = true;
    CHECK(found);
  }
  SUBCASE("broken antisymmetry is reported")
  {
    auto f = algebras::so3();
    f.set_component(0, 1, 2, 2);
    const auto r = jacobi_check(f);
    REQUIRE_FALSE(r.ok);
    CHECK(r.violations.front().kind == JacobiViolation::Kind::antisymmetry);
  }
  SUBCASE("agrees with the vector-level identity on random tensors")
  {
    for (int trial = 0; trial < 200; ++trial) {
      StructureTensor f(3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
          for (std::size_t k = 0; k < 3; ++k)
            if (oracle::uniform_int(0, 4) == 0) f.set_bracket(i, j, k, oracle::uniform_int(-1, 1));
      CHECK(jacobi_check(f).ok == jacobi_by_vectors(f));
    }
  }
}

TEST_CASE("gl_transform")
{
  const auto h = algebras::heisenberg();
  CHECK(gl_transform(h, RationalMatrix::identity(3)) == h);

  SUBCASE("scaling by c scales every component by c")
  {
    auto f = algebras::sl2();
    const auto g = gl_transform(f, RationalMatrix::identity(3) * Rational(3));
    f *= 3;
    CHECK(g == f);
  }
  SUBCASE("heisenberg with e1 and e2 swapped")
  {
    const auto swap = RationalMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    const auto g = gl_transform(h, swap);
    CHECK(g.component(0, 1, 2) == -1);
    CHECK(g.component(1, 0, 2) == 1);
  }
  SUBCASE("matches the bracket-level change of basis and inverts exactly")
  {
    for (const auto& f : oracle::catalogue()) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto a = oracle::random_invertible(f.dim());
        const auto g = gl_transform(f, a);
        CHECK(g == transform_by_vectors(f, a));
        CHECK(gl_transform(g, inverse(a)) == f);
        CHECK(jacobi_check(g).ok);
      }
    }
    auto bad = oracle::direct_tensor(3, {{1, 2, 1, 1}, {1, 3, 2, 1}});
    for (int trial = 0; trial < 10; ++trial) CHECK_FALSE(jacobi_check(gl_transform(bad, oracle::random_invertible(3))).ok);
  }
  CHECK_THROWS_AS(gl_transform(h, RationalMatrix(3, 3)), std::domain_error);
}

TEST_CASE("adjoint representation")
{
  for (const auto& t : adjoint_representation(algebras::abelian(3)).generators) CHECK(t.is_zero());
  const auto so3 = adjoint_representation(algebras::so3());
  CHECK(so3.module_dim == 3);
  // (t_1)(3, 2) = f_12^3 = 1
  CHECK(so3.generators[0](2, 1) == 1);
  CHECK(so3.generators[0](1, 2) == -1);
  CHECK(representation_check(algebras::so3(), so3));

  const auto ni2 = evaluate_family(builtin_family_ni2(1, 1, 1), 0);
  const auto ad = adjoint_representation(ni2);
  CHECK(ad.generators[0] == RationalMatrix::from_rows({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}));

  SUBCASE("representation_check of ad matches Jacobi on mutated tensors")
  {
    for (int trial = 0; trial < 100; ++trial) {
      auto f = oracle::catalogue()[static_cast<std::size_t>(oracle::uniform_int(4, 8))];
      if (trial % 2) {
        const auto n = f.dim();
        f.set_bracket(static_cast<std::size_t>(oracle::uniform_int(0, static_cast<long>(n) - 2)), n - 1,
                      static_cast<std::size_t>(oracle::uniform_int(0, static_cast<long>(n) - 1)),
                      oracle::uniform_int(-2, 2));
      }
      CHECK(representation_check(f, adjoint_matrices(f)) == jacobi_check(f).ok);
    }
  }
  CHECK_THROWS_AS(adjoint_representation(oracle::direct_tensor(3, {{1, 2, 1, 1}, {1, 3, 2, 1}})), std::domain_error);
}

TEST_CASE("representation_check")
{
  CHECK(representation_check(algebras::sl2(), Representation::trivial(3, 2)));
  Representation ids{2, {RationalMatrix::identity(2), RationalMatrix::identity(2), RationalMatrix::identity(2)}};
  CHECK_FALSE(representation_check(algebras::so3(), ids));
  CHECK_THROWS_AS(representation_check(algebras::so3(), Representation::trivial(2, 1)), std::invalid_argument);
  // Defining representation of sl2 on C^2.
  Representation def{2,
                     {RationalMatrix::from_rows({{1, 0}, {0, -1}}), RationalMatrix::from_rows({{0, 1}, {0, 0}}),
                      RationalMatrix::from_rows({{0, 0}, {1, 0}})}};
  CHECK(representation_check(algebras::sl2(), def));
}

TEST_CASE("semidirect products")
{
  SUBCASE("abelian pieces with b = 0")
  {
    const auto f = semidirect_product(algebras::abelian(1), algebras::abelian(2), {RationalMatrix(2, 2)});
    CHECK(f == algebras::abelian(3));
  }
  SUBCASE("R x R with b(1) = 1 is [e1,e2] = e2")
  {
    const auto f = semidirect_product(algebras::abelian(1), algebras::abelian(1), {RationalMatrix::identity(1)});
    CHECK(f == oracle::direct_tensor(2, {{1, 2, 2, 1}}));
  }
  SUBCASE("R x_phi R^2 reproduces the ni2 tensor")
  {
    for (int i = 0; i <= 10; ++i) {
      const Rational t = frac(i, 10);
      RationalMatrix phi(2, 2);
      phi(0, 0) = 1 + t;
      phi(1, 1) = 1 + t + t * t;
      const auto f = semidirect_product(algebras::abelian(1), algebras::abelian(2), {phi});
      CHECK(f == evaluate_family(builtin_family_ni2(1, 1, 1), t));
      CHECK(jacobi_check(f).ok);
    }
  }
  SUBCASE("so(3) acting on itself by ad")
  {
    const auto ad = adjoint_representation(algebras::so3());
    const auto f = semidirect_product(algebras::so3(), algebras::abelian(3), ad.generators);
    CHECK(f.dim() == 6);
    CHECK(jacobi_check(f).ok);
  }
  SUBCASE("preconditions")
  {
    // Not a derivation of the Heisenberg algebra: scales e1 only.
    RationalMatrix d(3, 3);
    d(0, 0) = 1;
    CHECK_THROWS_AS(semidirect_product(algebras::abelian(1), algebras::heisenberg(), {d}), std::invalid_argument);
    // Not a homomorphism: so(3) cannot act by the identity on R^1.
    const RationalMatrix one = RationalMatrix::identity(1);
    CHECK_THROWS_AS(semidirect_product(algebras::so3(), algebras::abelian(1), {one, one, one}), std::invalid_argument);
    CHECK_THROWS_AS(semidirect_product(algebras::abelian(2), algebras::abelian(1), {one}), std::invalid_argument);
  }
}

TEST_CASE("derivation spaces")
{
  for (std::size_t n = 1; n <= 4; ++n) CHECK(derivation_space(algebras::abelian(n)).dimension == n * n);
  CHECK(derivation_space(algebras::so3()).dimension == 3);
  CHECK(derivation_space(algebras::sl2()).dimension == 3);
  CHECK(derivation_space(algebras::heisenberg()).dimension == 6);
  for (const auto& f : oracle::catalogue()) {
    const auto der = derivation_space(f);
    CHECK(der.basis.size() == der.dimension);
    for (const auto& d : der.basis) CHECK(is_derivation(f, d));
    for (int trial = 0; trial < 3; ++trial)
      CHECK(derivation_space(gl_transform(f, oracle::random_invertible(f.dim()))).dimension == der.dimension);
  }
  // Inner derivations are derivations.
  for (const auto& t : adjoint_representation(algebras::sl2()).generators) CHECK(is_derivation(algebras::sl2(), t));
}

TEST_CASE("deformation families")
{
  const auto ni2 = builtin_family_ni2(1, 1, 1);
  CHECK(ni2.component(0, 1, 1) == Polynomial(1) + Polynomial::parameter());
  CHECK(ni2.component(1, 0, 1) == -(Polynomial(1) + Polynomial::parameter()));
  CHECK(ni2.is_antisymmetric());
  CHECK_FALSE(ni2.is_constant());

  auto f0 = evaluate_family(ni2, 0);
  CHECK(f0 == oracle::direct_tensor(3, {{1, 2, 2, 1}, {1, 3, 3, 1}}));
  auto f1 = evaluate_family(ni2, 1);
  CHECK(f1 == oracle::direct_tensor(3, {{1, 2, 2, 2}, {1, 3, 3, 3}}));
  CHECK(evaluate_family(builtin_family_ni2(2, 3, 1), 0) == oracle::direct_tensor(3, {{1, 2, 2, 2}, {1, 3, 3, 3}}));
  CHECK(builtin_family_ni2(1, 5, 7).component(0, 2, 2).coefficient(2) == 35);
  for (int i = 0; i <= 10; ++i) CHECK(jacobi_check(evaluate_family(ni2, frac(i, 10))).ok);

  CHECK_THROWS_AS(evaluate_family(ni2, 2), std::out_of_range);
  CHECK_THROWS_AS(builtin_family_ni2(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(builtin_family_ni2(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(builtin_family_ni2(1, 1, 0), std::invalid_argument);

  const auto constant = constant_family(algebras::so3());
  CHECK(constant.is_constant());
  CHECK(evaluate_family(constant, frac(1, 3)) == algebras::so3());
  CHECK(evaluate_family(constant, 1) == algebras::so3());

  const auto d = ni2.derivative_at(frac(1, 2));
  CHECK(d.component(0, 1, 1) == 1);
  CHECK(d.component(0, 2, 2) == 2);
}

TEST_CASE("solvable ratio invariant")
{
  const auto ni2 = builtin_family_ni2(1, 1, 1);
  CHECK(solvable_ratio_invariant(evaluate_family(ni2, 0)) == std::pair<Rational, Rational>(1, 1));
  CHECK(solvable_ratio_invariant(evaluate_family(ni2, 1)) == std::pair<Rational, Rational>(frac(2, 3), frac(3, 2)));
  CHECK(solvable_ratio_invariant(oracle::direct_tensor(3, {{1, 2, 2, 2}, {1, 3, 3, 4}})) ==
        std::pair<Rational, Rational>(frac(1, 2), 2));

  std::set<std::pair<Rational, Rational>> seen;
  for (int i = 1; i <= 10; ++i) seen.insert(solvable_ratio_invariant(evaluate_family(ni2, frac(i, 10))));
  CHECK(seen.size() == 10);

  CHECK_THROWS_AS(solvable_ratio_invariant(algebras::so3()), std::invalid_argument);
  CHECK_THROWS_AS(solvable_ratio_invariant(oracle::direct_tensor(3, {{1, 2, 2, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(solvable_ratio_invariant(algebras::abelian(2)), std::invalid_argument);
}
