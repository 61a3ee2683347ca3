#include "liebrst/classify3.hpp"

#include <stdexcept>

namespace liebrst {

namespace {

int levi_civita(std::size_t i, std::size_t j, std::size_t k)
{
  if (i == j || j == k || i == k) return 0;
  // Even permutations of (0,1,2) are its cyclic shifts.
  return ((j + 3 - i) % 3 == 1) ? 1 : -1;
}

int sign_changes(const std::array<Rational, 4>& coeffs)
{
  int changes = 0, last = 0;
  for (const auto& c : coeffs) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

bool BehrData::valid() const
{
  if (n.rows() != 3 || n.cols() != 3) return false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (n(i, j) != n(j, i)) return false;
  for (std::size_t l = 0; l < 3; ++l) {
    Rational s = 0;
    for (std::size_t m = 0; m < 3; ++m) s += n(l, m) * a[m];
    if (sgn(s) != 0) return false;
  }
  return true;
}

BehrData extract_na(const StructureTensor& f)
{
  if (f.dim() != 3) throw std::invalid_argument("extract_na: algebra must be 3-dimensional");
  if (!jacobi_check(f).ok) throw std::domain_error("extract_na: structure tensor fails the Jacobi identity");
  BehrData d;
  for (std::size_t i = 0; i < 3; ++i) {
    Rational trace = 0;
    for (std::size_t k = 0; k < 3; ++k) trace += f.component(i, k, k);
    d.a[i] = -trace / 2;
  }
  RationalMatrix contraction(3, 3);  // ε^{mij} f_ij^k
  for (std::size_t m = 0; m < 3; ++m)
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (int e = levi_civita(m, i, j)) contraction(m, k) += e * f.component(i, j, k);
  for (std::size_t m = 0; m < 3; ++m)
    for (std::size_t k = 0; k < 3; ++k) d.n(m, k) = (contraction(m, k) + contraction(k, m)) / 4;
  return d;
}

StructureTensor assemble_from_na(const BehrData& d)
{
  if (!d.valid()) throw std::domain_error("assemble_from_na: need symmetric n with n·a = 0");
  StructureTensor f(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        Rational c = 0;
        for (std::size_t l = 0; l < 3; ++l) {
          const int e = levi_civita(i, j, l);
          if (!e) continue;
          Rational inner = d.n(l, k);
          for (std::size_t m = 0; m < 3; ++m)
            if (int e2 = levi_civita(l, k, m)) inner += e2 * d.a[m];
          c += e * inner;
        }
        f.set_component(i, j, k, std::move(c));
      }
  return f;
}

BianchiLabel bianchi_signature(const BehrData& d)
{
  const RationalMatrix& n = d.n;
  // det(xI − n) = x³ − c2 x² + c1 x − c0
  const Rational c2 = n(0, 0) + n(1, 1) + n(2, 2);
  const Rational c1 = n(0, 0) * n(1, 1) - n(0, 1) * n(1, 0) + n(0, 0) * n(2, 2) - n(0, 2) * n(2, 0) +
                      n(1, 1) * n(2, 2) - n(1, 2) * n(2, 1);
  const Rational c0 = determinant(n);

  BianchiLabel out;
  // n is symmetric, so every root is real and Descartes' rule counts exactly.
  out.positive = static_cast<std::size_t>(sign_changes({Rational(1), Rational(-c2), c1, Rational(-c0)}));
  out.negative = static_cast<std::size_t>(sign_changes({Rational(1), c2, c1, c0}));
  out.zero = 3 - out.positive - out.negative;
  out.rank = 3 - out.zero;
  out.a_zero = sgn(d.a[0]) == 0 && sgn(d.a[1]) == 0 && sgn(d.a[2]) == 0;
  const bool definite = out.positive == 0 || out.negative == 0;

  if (out.a_zero) {
    switch (out.rank) {
    case 0: out.label = "I"; break;
    case 1: out.label = "II"; break;
    case 2: out.label = definite ? "VII_0" : "VI_0"; break;
    default: out.label = definite ? "IX" : "VIII"; break;
    }
    return out;
  }
  switch (out.rank) {
  case 0: out.label = "V"; break;
  case 1: out.label = "IV"; break;
  case 2: {
    // With one zero eigenvalue, c1 is the product of the other two.
    const Rational a2 = d.a[0] * d.a[0] + d.a[1] * d.a[1] + d.a[2] * d.a[2];
    out.h = a2 / c1;
    if (definite)
      out.label = "VII_h";
    else
      out.label = (*out.h == -1) ? "III" : "VI_h";
    break;
  }
  default:
    // n·a = 0 with a ≠ 0 forces rank ≤ 2.
    throw std::domain_error("bianchi_signature: a ≠ 0 with invertible n violates n·a = 0");
  }
  return out;
}

}  // namespace liebrst
