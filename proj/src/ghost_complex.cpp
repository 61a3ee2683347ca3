#include "liebrst/ghost_complex.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace liebrst {

FockBasis::FockBasis(std::size_t ghosts) : n_(ghosts)
{
  if (ghosts >= 63) throw std::invalid_argument("FockBasis: too many ghosts");
}

std::size_t FockBasis::ghost_number(std::uint64_t mask)
{
  return static_cast<std::size_t>(std::popcount(mask));
}

std::uint64_t binomial(std::size_t n, std::size_t k)
{
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t FockBasis::stratum_dim(std::size_t k) const
{
  return static_cast<std::size_t>(binomial(n_, k));
}

std::vector<std::uint64_t> FockBasis::stratum(std::size_t k) const
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < dim(); ++m)
    if (ghost_number(m) == k) out.push_back(m);
  return out;
}

std::size_t FockBasis::position_in_stratum(std::uint64_t mask) const
{
  // Rank among same-popcount masks in ascending order (combinatorial number system).
  std::size_t pos = 0, seen = 0;
  for (std::size_t bit = 0; bit < n_; ++bit)
    if (mask >> bit & 1u) {
      ++seen;
      pos += static_cast<std::size_t>(binomial(bit, seen));
    }
  return pos;
}

namespace {

int sign_below(std::uint64_t mask, std::size_t j)
{
  const std::uint64_t below = mask & ((std::uint64_t{1} << j) - 1);
  return std::popcount(below) % 2 ? -1 : 1;
}

void require_ghost(std::size_t j, std::size_t n, const char* who)
{
  if (j >= n)
    throw std::out_of_range(std::string(who) + ": ghost index " + std::to_string(j + 1) + " outside 1.." +
                            std::to_string(n));
}

}  // namespace

SignedPermMatrix creation_matrix(std::size_t j, std::size_t n)
{
  require_ghost(j, n, "creation_matrix");
  const std::size_t N = std::size_t{1} << n;
  const std::uint64_t bit = std::uint64_t{1} << j;
  std::vector<std::optional<SignedPermMatrix::Entry>> cols(N);
  for (std::uint64_t m = 0; m < N; ++m)
    if (!(m & bit)) cols[m] = SignedPermMatrix::Entry{static_cast<std::size_t>(m | bit), sign_below(m, j)};
  return SignedPermMatrix(N, std::move(cols));
}

SignedPermMatrix annihilation_matrix(std::size_t j, std::size_t n)
{
  require_ghost(j, n, "annihilation_matrix");
  const std::size_t N = std::size_t{1} << n;
  const std::uint64_t bit = std::uint64_t{1} << j;
  std::vector<std::optional<SignedPermMatrix::Entry>> cols(N);
  for (std::uint64_t m = 0; m < N; ++m)
    if (m & bit) cols[m] = SignedPermMatrix::Entry{static_cast<std::size_t>(m & ~bit), sign_below(m, j)};
  return SignedPermMatrix(N, std::move(cols));
}

std::vector<int> grading_diagonal(std::size_t n, std::size_t module_dim)
{
  const std::size_t N = std::size_t{1} << n;
  std::vector<int> g;
  g.reserve(N * module_dim);
  for (std::uint64_t m = 0; m < N; ++m)
    for (std::size_t a = 0; a < module_dim; ++a) g.push_back(FockBasis::ghost_number(m) % 2 ? -1 : 1);
  return g;
}

RationalMatrix grading_matrix(std::size_t n, std::size_t module_dim)
{
  const auto g = grading_diagonal(n, module_dim);
  RationalMatrix m(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) m(i, i) = g[i];
  return m;
}

GradedMatrix assemble_brst(const StructureTensor& f, const Representation& rho)
{
  const std::size_t n = f.dim();
  const std::size_t d = rho.module_dim;
  if (rho.generators.size() != n) throw std::invalid_argument("assemble_brst: generator count must equal algebra dimension");
  const std::size_t N = std::size_t{1} << n;

  GradedMatrix out{n, d, RationalMatrix(N * d, N * d), grading_diagonal(n, d)};
  auto& q = out.q;

  std::vector<SignedPermMatrix> create, annihilate;
  for (std::size_t i = 0; i < n; ++i) {
    create.push_back(creation_matrix(i, n));
    annihilate.push_back(annihilation_matrix(i, n));
  }

  for (std::size_t i = 0; i < n; ++i) {
    const RationalMatrix& t = rho.generators[i];
    for (std::size_t m = 0; m < N; ++m) {
      const auto& e = create[i].column(m);
      if (!e) continue;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          if (sgn(t(r, c)) != 0) q(e->row * d + r, m * d + c) += e->sign * t(r, c);
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const SignedPermMatrix cc = create[i] * create[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& fijk = f.component(i, j, k);
        if (sgn(fijk) == 0) continue;
        const SignedPermMatrix word = cc * annihilate[k];
        const Rational coeff = -fijk / 2;
        for (std::size_t m = 0; m < N; ++m) {
          const auto& e = word.column(m);
          if (!e) continue;
          for (std::size_t a = 0; a < d; ++a) q(e->row * d + a, m * d + a) += e->sign * coeff;
        }
      }
    }
  return out;
}

GradedMatrix build_brst(const StructureTensor& f, const Representation& rho)
{
  if (!jacobi_check(f).ok) throw std::domain_error("build_brst: structure tensor fails the Jacobi identity");
  if (!representation_check(f, rho)) throw std::domain_error("build_brst: matrices do not represent the bracket");
  return assemble_brst(f, rho);
}

RationalMatrix coboundary_matrix(const StructureTensor& f, const Representation& rho, std::size_t k)
{
  const std::size_t n = f.dim();
  if (k > n) throw std::out_of_range("coboundary_matrix: degree " + std::to_string(k) + " exceeds " + std::to_string(n));
  if (rho.generators.size() != n) throw std::invalid_argument("coboundary_matrix: generator count must equal algebra dimension");
  const std::size_t d = rho.module_dim;
  const FockBasis fock(n);
  const auto targets = fock.stratum(k + 1);
  RationalMatrix delta(targets.size() * d, fock.stratum_dim(k) * d);

  for (std::size_t row_pos = 0; row_pos < targets.size(); ++row_pos) {
    const std::uint64_t target = targets[row_pos];
    std::vector<std::size_t> idx;
    for (std::size_t b = 0; b < n; ++b)
      if (target >> b & 1u) idx.push_back(b);

    // Σ_p (−1)^{p+1} t_{j_p} u_{J \ j_p}
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const std::uint64_t source = target & ~(std::uint64_t{1} << idx[p]);
      const std::size_t col_pos = fock.position_in_stratum(source);
      const int sign = p % 2 ? -1 : 1;
      const RationalMatrix& t = rho.generators[idx[p]];
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          if (sgn(t(a, b)) != 0) delta(row_pos * d + a, col_pos * d + b) += sign * t(a, b);
    }

    // Σ_{p<q} (−1)^{p+q} f_{j_p j_q}^m u_{m, J \ {j_p, j_q}}
    for (std::size_t p = 0; p < idx.size(); ++p)
      for (std::size_t qq = p + 1; qq < idx.size(); ++qq) {
        const std::uint64_t rest = target & ~(std::uint64_t{1} << idx[p]) & ~(std::uint64_t{1} << idx[qq]);
        const int sign = (p + qq) % 2 ? -1 : 1;
        for (std::size_t m = 0; m < n; ++m) {
          const Rational& c = f.component(idx[p], idx[qq], m);
          if (sgn(c) == 0 || (rest >> m & 1u)) continue;
          const std::uint64_t source = rest | (std::uint64_t{1} << m);
          const std::size_t col_pos = fock.position_in_stratum(source);
          const int reorder = sign_below(rest, m);
          for (std::size_t a = 0; a < d; ++a) delta(row_pos * d + a, col_pos * d + a) += sign * reorder * c;
        }
      }
  }
  return delta;
}

std::vector<std::size_t> cohomology_dimensions(const StructureTensor& f, const Representation& rho)
{
  if (!jacobi_check(f).ok) throw std::domain_error("cohomology_dimensions: structure tensor fails the Jacobi identity");
  if (!representation_check(f, rho)) throw std::domain_error("cohomology_dimensions: matrices do not represent the bracket");
  const std::size_t n = f.dim();
  const std::size_t d = rho.module_dim;
  std::vector<std::size_t> ranks(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) ranks[k] = rank_exact(coboundary_matrix(f, rho, k));
  std::vector<std::size_t> dims(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t cochains = static_cast<std::size_t>(binomial(n, k)) * d;
    dims[k] = cochains - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
  }
  return dims;
}

bool nilpotency_check(const GradedMatrix& q)
{
  return (q.q * q.q).is_zero();
}

bool is_grading_odd(const GradedMatrix& q)
{
  // γQγ = −Q means every nonzero entry joins opposite-parity basis vectors.
  for (std::size_t r = 0; r < q.q.rows(); ++r)
    for (std::size_t c = 0; c < q.q.cols(); ++c)
      if (sgn(q.q(r, c)) != 0 && q.grading[r] == q.grading[c]) return false;
  return true;
}

bool raises_ghost_number(const GradedMatrix& q)
{
  const std::size_t d = q.module_dim;
  for (std::size_t r = 0; r < q.q.rows(); ++r)
    for (std::size_t c = 0; c < q.q.cols(); ++c)
      if (sgn(q.q(r, c)) != 0 && FockBasis::ghost_number(r / d) != FockBasis::ghost_number(c / d) + 1) return false;
  return true;
}

}  // namespace liebrst
