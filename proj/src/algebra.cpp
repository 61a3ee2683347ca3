#include "liebrst/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace liebrst {

namespace {

std::string one_based(std::size_t i)
{
  return std::to_string(i + 1);
}

}  // namespace

// --- StructureTensor -------------------------------------------------------

StructureTensor::StructureTensor(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

void StructureTensor::set_component(std::size_t i, std::size_t j, std::size_t k, Rational value)
{
  data_.at(index(i, j, k)) = std::move(value);
}

void StructureTensor::set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& value)
{
  if (i == j && sgn(value) != 0) throw std::invalid_argument("set_bracket: [E_i, E_i] must vanish");
  data_.at(index(i, j, k)) = value;
  data_.at(index(j, i, k)) = -value;
}

RationalVector StructureTensor::bracket(const RationalVector& x, const RationalVector& y) const
{
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket: vector dimension mismatch");
  RationalVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(component(i, j, k)) != 0) out[k] += xy * component(i, j, k);
    }
  }
  return out;
}

bool StructureTensor::is_abelian() const
{
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

StructureTensor& StructureTensor::operator*=(const Rational& s)
{
  for (auto& x : data_) x *= s;
  return *this;
}

StructureTensor operator+(const StructureTensor& a, const StructureTensor& b)
{
  if (a.dim() != b.dim()) throw std::invalid_argument("StructureTensor: dimension mismatch in +");
  StructureTensor out(a.dim());
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.set_component(i, j, k, a.component(i, j, k) + b.component(i, j, k));
  return out;
}

namespace algebras {

StructureTensor abelian(std::size_t n)
{
  return StructureTensor(n);
}

StructureTensor heisenberg()
{
  StructureTensor f(3);
  f.set_bracket(0, 1, 2, 1);
  return f;
}

StructureTensor so3()
{
  StructureTensor f(3);
  f.set_bracket(0, 1, 2, 1);
  f.set_bracket(1, 2, 0, 1);
  f.set_bracket(2, 0, 1, 1);
  return f;
}

StructureTensor sl2()
{
  StructureTensor f(3);
  f.set_bracket(0, 1, 1, 2);
  f.set_bracket(0, 2, 2, -2);
  f.set_bracket(1, 2, 0, 1);
  return f;
}

}  // namespace algebras

Representation Representation::trivial(std::size_t algebra_dim, std::size_t module_dim)
{
  return Representation{module_dim, std::vector<RationalMatrix>(algebra_dim, RationalMatrix(module_dim, module_dim))};
}

// --- checks ------------------------------------------------------------------

JacobiReport jacobi_check(const StructureTensor& f)
{
  JacobiReport report;
  const std::size_t n = f.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (f.component(i, j, k) + f.component(j, i, k) != 0)
          report.violations.push_back({JacobiViolation::Kind::antisymmetry, i, j, k, k});

  Rational sum;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          sum = 0;
          for (std::size_t l = 0; l < n; ++l) {
            sum += f.component(i, j, l) * f.component(l, k, m);
            sum += f.component(j, k, l) * f.component(l, i, m);
            sum += f.component(k, i, l) * f.component(l, j, m);
          }
          if (sgn(sum) != 0) report.violations.push_back({JacobiViolation::Kind::jacobi, i, j, k, m});
        }
  report.ok = report.violations.empty();
  return report;
}

StructureTensor gl_transform(const StructureTensor& f, const RationalMatrix& a)
{
  const std::size_t n = f.dim();
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("gl_transform: basis change must be n x n");
  const RationalMatrix ainv = inverse(a);

  // [E'_i, E'_j] = A^p_i A^q_j f_pq^h E_h, then re-express E_h in the new basis.
  StructureTensor out(n);
  std::vector<Rational> mixed(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(mixed.begin(), mixed.end(), Rational(0));
      for (std::size_t p = 0; p < n; ++p) {
        if (sgn(a(p, i)) == 0) continue;
        for (std::size_t q = 0; q < n; ++q) {
          if (sgn(a(q, j)) == 0) continue;
          const Rational w = a(p, i) * a(q, j);
          for (std::size_t h = 0; h < n; ++h)
            if (sgn(f.component(p, q, h)) != 0) mixed[h] += w * f.component(p, q, h);
        }
      }
      for (std::size_t k = 0; k < n; ++k) {
        Rational c = 0;
        for (std::size_t h = 0; h < n; ++h)
          if (sgn(mixed[h]) != 0) c += ainv(k, h) * mixed[h];
        out.set_component(i, j, k, std::move(c));
      }
    }
  return out;
}

Representation transport_representation(const Representation& rho, const RationalMatrix& a)
{
  const std::size_t n = rho.generators.size();
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("transport_representation: basis change must be n x n");
  Representation out{rho.module_dim, {}};
  for (std::size_t i = 0; i < n; ++i) {
    RationalMatrix t(rho.module_dim, rho.module_dim);
    for (std::size_t p = 0; p < n; ++p)
      if (sgn(a(p, i)) != 0) t += a(p, i) * rho.generators[p];
    out.generators.push_back(std::move(t));
  }
  return out;
}

Representation adjoint_matrices(const StructureTensor& f)
{
  const std::size_t n = f.dim();
  Representation rho{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    RationalMatrix t(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(k, j) = f.component(i, j, k);
    rho.generators.push_back(std::move(t));
  }
  return rho;
}

Representation adjoint_representation(const StructureTensor& f)
{
  if (!jacobi_check(f).ok) throw std::domain_error("adjoint_representation: structure tensor fails the Jacobi identity");
  return adjoint_matrices(f);
}

bool representation_check(const StructureTensor& f, const Representation& rho)
{
  const std::size_t n = f.dim();
  if (rho.generators.size() != n)
    throw std::invalid_argument("representation_check: expected " + std::to_string(n) + " generators, got " +
                                std::to_string(rho.generators.size()));
  for (const auto& t : rho.generators)
    if (t.rows() != rho.module_dim || t.cols() != rho.module_dim)
      throw std::invalid_argument("representation_check: generator shape does not match module dimension");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RationalMatrix rhs(rho.module_dim, rho.module_dim);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(f.component(i, j, k)) != 0) rhs += f.component(i, j, k) * rho.generators[k];
      if (!(commutator(rho.generators[i], rho.generators[j]) == rhs)) return false;
    }
  return true;
}

bool is_derivation(const StructureTensor& f, const RationalMatrix& d)
{
  const std::size_t n = f.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        Rational lhs = 0, rhs = 0;
        for (std::size_t k = 0; k < n; ++k) lhs += f.component(i, j, k) * d(m, k);
        for (std::size_t p = 0; p < n; ++p) {
          rhs += d(p, i) * f.component(p, j, m);
          rhs += d(p, j) * f.component(i, p, m);
        }
        if (lhs != rhs) return false;
      }
  return true;
}

StructureTensor semidirect_product(const StructureTensor& g, const StructureTensor& h,
                                   const std::vector<RationalMatrix>& b)
{
  const std::size_t p = g.dim(), q = h.dim();
  if (b.size() != p)
    throw std::invalid_argument("semidirect_product: need one action matrix per basis element of g, got " +
                                std::to_string(b.size()));
  for (std::size_t i = 0; i < p; ++i) {
    if (b[i].rows() != q || b[i].cols() != q)
      throw std::invalid_argument("semidirect_product: action matrix " + one_based(i) + " has wrong shape");
    if (!is_derivation(h, b[i]))
      throw std::invalid_argument("semidirect_product: b(X_" + one_based(i) + ") is not a derivation of h");
  }
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      RationalMatrix image(q, q);
      for (std::size_t k = 0; k < p; ++k)
        if (sgn(g.component(i, j, k)) != 0) image += g.component(i, j, k) * b[k];
      if (!(commutator(b[i], b[j]) == image))
        throw std::invalid_argument("semidirect_product: b is not a homomorphism on pair (" + one_based(i) + ", " +
                                    one_based(j) + ")");
    }

  StructureTensor f(p + q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k < p; ++k) f.set_component(i, j, k, g.component(i, j, k));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t c = 0; c < q; ++c)
      for (std::size_t e = 0; e < q; ++e) f.set_component(p + a, p + c, p + e, h.component(a, c, e));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t c = 0; c < q; ++c) {
        f.set_component(i, p + a, p + c, b[i](c, a));
        f.set_component(p + a, i, p + c, -b[i](c, a));
      }
  return f;
}

DerivationSpace derivation_space(const StructureTensor& f)
{
  const std::size_t n = f.dim();
  // Unknown D(r, c) sits at column r*n + c. One row per (i < j, m).
  const std::size_t equations = n * (n > 0 ? n - 1 : 0) / 2 * n;
  RationalMatrix system(equations, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m, ++row) {
        for (std::size_t k = 0; k < n; ++k) system(row, m * n + k) += f.component(i, j, k);
        for (std::size_t p = 0; p < n; ++p) {
          system(row, p * n + i) -= f.component(p, j, m);
          system(row, p * n + j) -= f.component(i, p, m);
        }
      }

  DerivationSpace space;
  for (const auto& v : kernel_basis(system))
    space.basis.emplace_back(n, n, v);
  space.dimension = space.basis.size();
  return space;
}

// --- families ----------------------------------------------------------------

DeformationFamily::DeformationFamily(std::size_t dim, std::string parameter, Rational lo, Rational hi)
    : dim_(dim), parameter_(std::move(parameter)), lo_(std::move(lo)), hi_(std::move(hi)), data_(dim * dim * dim)
{
  if (hi_ < lo_) throw std::invalid_argument("DeformationFamily: empty parameter interval");
}

void DeformationFamily::set_component(std::size_t i, std::size_t j, std::size_t k, Polynomial p)
{
  data_.at(index(i, j, k)) = std::move(p);
}

void DeformationFamily::set_bracket(std::size_t i, std::size_t j, std::size_t k, const Polynomial& p)
{
  if (i == j && !p.is_zero()) throw std::invalid_argument("set_bracket: [E_i, E_i] must vanish");
  data_.at(index(i, j, k)) = p;
  data_.at(index(j, i, k)) = -p;
}

bool DeformationFamily::is_constant() const
{
  return std::all_of(data_.begin(), data_.end(), [](const Polynomial& p) { return p.is_constant(); });
}

bool DeformationFamily::is_antisymmetric() const
{
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!(component(i, j, k) + component(j, i, k)).is_zero()) return false;
  return true;
}

StructureTensor DeformationFamily::derivative_at(const Rational& t) const
{
  StructureTensor out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) out.set_component(i, j, k, component(i, j, k).derivative()(t));
  return out;
}

DeformationFamily constant_family(const StructureTensor& f, Rational lo, Rational hi)
{
  const std::size_t n = f.dim();
  DeformationFamily family(n, "t", std::move(lo), std::move(hi));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) family.set_component(i, j, k, Polynomial(f.component(i, j, k)));
  return family;
}

StructureTensor evaluate_family(const DeformationFamily& family, const Rational& t0)
{
  if (!family.contains(t0))
    throw std::out_of_range("evaluate_family: " + family.parameter() + " = " + to_string(t0) + " outside [" +
                            to_string(family.lo()) + ", " + to_string(family.hi()) + "]");
  const std::size_t n = family.dim();
  StructureTensor f(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) f.set_component(i, j, k, family.component(i, j, k)(t0));
  return f;
}

DeformationFamily builtin_family_ni2(const Rational& lambda, const Rational& mu, const Rational& alpha)
{
  if (sgn(lambda) == 0) throw std::invalid_argument("ni2: lambda must be nonzero");
  if (sgn(mu) == 0) throw std::invalid_argument("ni2: mu must be nonzero");
  if (sgn(alpha) <= 0) throw std::invalid_argument("ni2: alpha must be positive");
  const Polynomial t = Polynomial::parameter();
  DeformationFamily family(3, "t", 0, 1);
  family.set_bracket(0, 1, 1, (Polynomial(1) + t) * Polynomial(lambda));
  family.set_bracket(0, 2, 2, (Polynomial(1) + t + Polynomial(alpha) * t.pow(2)) * Polynomial(mu));
  return family;
}

std::pair<Rational, Rational> solvable_ratio_invariant(const StructureTensor& f)
{
  if (f.dim() != 3) throw std::invalid_argument("solvable_ratio_invariant: algebra must be 3-dimensional");
  for (std::size_t k = 0; k < 3; ++k)
    if (sgn(f.component(1, 2, k)) != 0)
      throw std::invalid_argument("solvable_ratio_invariant: span(e2, e3) is not abelian");
  if (sgn(f.component(0, 1, 0)) != 0 || sgn(f.component(0, 2, 0)) != 0)
    throw std::invalid_argument("solvable_ratio_invariant: span(e2, e3) is not an ideal");
  if (sgn(f.component(0, 1, 2)) != 0 || sgn(f.component(0, 2, 1)) != 0)
    throw std::invalid_argument("solvable_ratio_invariant: ad(e1) is not diagonal on span(e2, e3)");
  const Rational& d2 = f.component(0, 1, 1);
  const Rational& d3 = f.component(0, 2, 2);
  if (sgn(d2) == 0 || sgn(d3) == 0) throw std::invalid_argument("solvable_ratio_invariant: zero weight");
  Rational r = d2 / d3, s = d3 / d2;
  if (s < r) std::swap(r, s);
  return {r, s};
}

}  // namespace liebrst
