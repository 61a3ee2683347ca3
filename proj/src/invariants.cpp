#include "liebrst/invariants.hpp"

#include "liebrst/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace liebrst {

// --- vertices ----------------------------------------------------------------

VertexOperator make_vertex(std::string label, ComplexMatrix matrix, Parity parity, const std::vector<int>& grading)
{
  const auto n = static_cast<Eigen::Index>(grading.size());
  if (matrix.rows() != n || matrix.cols() != n)
    throw std::invalid_argument("vertex '" + label + "': expected a " + std::to_string(n) + "x" + std::to_string(n) +
                                " matrix");
  if (!all_finite(matrix)) throw std::invalid_argument("vertex '" + label + "': non-finite entries");
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      const bool same = grading[r] == grading[c];
      const bool allowed = parity == Parity::even ? same : !same;
      if (!allowed && std::abs(matrix(r, c)) > 1e-10)
        throw std::invalid_argument("vertex '" + label + "' is not " + (parity == Parity::even ? "even" : "odd") +
                                    " with respect to the grading");
    }
  return VertexOperator{std::move(label), std::move(matrix), parity};
}

namespace vertices {

VertexOperator identity(std::size_t ghosts, std::size_t module_dim)
{
  const auto g = grading_diagonal(ghosts, module_dim);
  return make_vertex("identity", ComplexMatrix::Identity(g.size(), g.size()), Parity::even, g);
}

VertexOperator ghost_number(std::size_t ghosts, std::size_t module_dim)
{
  const auto g = grading_diagonal(ghosts, module_dim);
  ComplexMatrix m = ComplexMatrix::Zero(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    m(i, i) = static_cast<double>(FockBasis::ghost_number(i / module_dim));
  return make_vertex("ghost-number", std::move(m), Parity::even, g);
}

VertexOperator grading(std::size_t ghosts, std::size_t module_dim)
{
  const auto g = grading_diagonal(ghosts, module_dim);
  ComplexMatrix m = ComplexMatrix::Zero(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) m(i, i) = g[i];
  return make_vertex("grading", std::move(m), Parity::even, g);
}

VertexOperator creation(std::size_t j, std::size_t ghosts, std::size_t module_dim)
{
  const auto g = grading_diagonal(ghosts, module_dim);
  const RationalMatrix c = kronecker(creation_matrix(j, ghosts).to_dense(), RationalMatrix::identity(module_dim));
  return make_vertex("c:" + std::to_string(j + 1), to_complex(c), Parity::odd, g);
}

}  // namespace vertices

ComplexMatrix graded_commutator(const ComplexMatrix& q, const VertexOperator& a)
{
  const double s = a.parity == Parity::even ? 1.0 : -1.0;
  return q * a.matrix - s * (a.matrix * q);
}

// --- curves and perturbations --------------------------------------------------

TensorCurve curve_of(const DeformationFamily& family)
{
  return TensorCurve{[family](const Rational& t) { return evaluate_family(family, t); },
                     [family](const Rational& t) { return family.derivative_at(t); }, family.lo(), family.hi()};
}

Representation representation_at(const RhoRule& rule, const StructureTensor& f)
{
  return rule.kind == RhoRule::Kind::fixed ? rule.fixed : adjoint_matrices(f);
}

std::size_t module_dim(const RhoRule& rule, std::size_t algebra_dim)
{
  return rule.kind == RhoRule::Kind::fixed ? rule.fixed.module_dim : algebra_dim;
}

namespace {

void require_inside(const TensorCurve& curve, const Rational& t)
{
  if (!curve.contains(t))
    throw std::out_of_range("parameter " + to_string(t) + " outside [" + to_string(curve.lo) + ", " +
                            to_string(curve.hi) + "]");
}

}  // namespace

GradedMatrix brst_at(const TensorCurve& curve, const RhoRule& rule, const Rational& lambda)
{
  require_inside(curve, lambda);
  const StructureTensor f = curve.value(lambda);
  return assemble_brst(f, representation_at(rule, f));
}

RationalMatrix brst_derivative_at(const TensorCurve& curve, const RhoRule& rule, const Rational& lambda)
{
  require_inside(curve, lambda);
  const StructureTensor df = curve.derivative(lambda);
  Representation drho = rule.kind == RhoRule::Kind::fixed
                            ? Representation::trivial(df.dim(), rule.fixed.module_dim)
                            : adjoint_matrices(df);
  return assemble_brst(df, drho).q;
}

RationalMatrix perturbation(const TensorCurve& curve, const RhoRule& rule, const Rational& lambda,
                            const Rational& lambda0)
{
  return brst_at(curve, rule, lambda).q - brst_at(curve, rule, lambda0).q;
}

RationalMatrix perturbation(const DeformationFamily& family, const RhoRule& rule, const Rational& lambda,
                            const Rational& lambda0)
{
  return perturbation(curve_of(family), rule, lambda, lambda0);
}

// --- hypotheses ----------------------------------------------------------------

namespace {

void validate_grid(const TensorCurve& curve, std::span<const Rational> grid)
{
  if (grid.empty()) throw std::invalid_argument("grid must contain at least one point");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require_inside(curve, grid[i]);
    if (i > 0 && !(grid[i - 1] < grid[i])) throw std::invalid_argument("grid must be strictly ascending");
  }
}

}  // namespace

HypothesesReport check_hypotheses(const TensorCurve& curve, const RhoRule& rule, std::span<const Rational> grid,
                                  const VertexOperator& a)
{
  validate_grid(curve, grid);
  HypothesesReport report;
  report.grid.assign(grid.begin(), grid.end());

  const GradedMatrix base = brst_at(curve, rule, grid.front());
  const FloatMatrix base_f = to_float(base.q);
  double min_eigen = std::numeric_limits<double>::infinity();

  for (const Rational& lambda : grid) {
    const GradedMatrix q = brst_at(curve, rule, lambda);
    report.nilpotent = report.nilpotent && nilpotency_check(q);
    report.grading_odd = report.grading_odd && is_grading_odd(q);

    const FloatMatrix qf = to_float(q.q);
    report.symmetry_defect = std::max(report.symmetry_defect, spectral_norm(FloatMatrix(qf - qf.transpose())));

    const RationalMatrix w = q.q - base.q;
    report.w_symmetric = report.w_symmetric && w == w.transpose();
    report.max_w_norm = std::max(report.max_w_norm, spectral_norm(to_float(w)));

    const FloatMatrix anti = qf * base_f + base_f * qf;
    const FloatMatrix sym = 0.5 * (anti + anti.transpose());
    if (sym.size() > 0) min_eigen = std::min(min_eigen, symmetric_eigen_min(sym));

    report.m_bound = std::max(report.m_bound, spectral_norm(graded_commutator(to_complex(q.q), a)));
  }
  report.self_adjoint = report.symmetry_defect <= 1e-10;

  report.sup_w_norm_sq = report.max_w_norm * report.max_w_norm;
  report.min_anticommutator_eigen = std::isfinite(min_eigen) ? min_eigen : 0.0;
  report.a = 0.0;
  report.b = std::max(report.sup_w_norm_sq, std::abs(report.min_anticommutator_eigen)) + 1e-6;
  report.h3_ok = std::isfinite(report.b) && report.b >= report.sup_w_norm_sq;

  // Separations h_k = (hi − lo)/4 · 2^{−k}; each quotient stays inside the interval.
  const Rational width = curve.hi - curve.lo;
  if (sgn(width) > 0) {
    Rational h = width / 4;
    std::vector<RationalMatrix> derivatives;
    std::vector<GradedMatrix> values;
    for (const Rational& lambda : grid) {
      derivatives.push_back(brst_derivative_at(curve, rule, lambda));
      values.push_back(brst_at(curve, rule, lambda));
    }
    for (int k = 0; k < 10; ++k, h /= 2) {
      double worst = 0.0;
      for (std::size_t g = 0; g < grid.size(); ++g) {
        Rational other = grid[g] + h;
        if (!curve.contains(other)) other = grid[g] - h;
        const Rational step = other - grid[g];
        RationalMatrix quotient = brst_at(curve, rule, other).q - values[g].q;
        quotient *= Rational(1 / step);
        worst = std::max(worst, spectral_norm(to_float(quotient - derivatives[g])));
      }
      report.separations.push_back(to_double(h));
      report.deviations.push_back(worst);
    }
    bool ok = true;
    constexpr double negligible = 1e-12;
    for (std::size_t k = 0; k + 1 < report.deviations.size(); ++k) {
      const double prev = report.deviations[k], next = report.deviations[k + 1];
      if (prev <= negligible) {
        report.ratios.push_back(0.0);
        if (next > negligible) ok = false;
        continue;
      }
      const double ratio = next / prev;
      report.ratios.push_back(ratio);
      if (std::abs(ratio - 0.5) > 0.2 * 0.5) ok = false;
    }
    report.h4_ok = ok;
  } else {
    report.h4_ok = true;
  }
  return report;
}

HypothesesReport check_hypotheses(const DeformationFamily& family, const RhoRule& rule,
                                  std::span<const Rational> grid, const VertexOperator& a)
{
  return check_hypotheses(curve_of(family), rule, grid, a);
}

// --- index -----------------------------------------------------------------------

namespace {

void require_square_zero(const GradedMatrix& q, const char* who)
{
  if (!nilpotency_check(q)) throw std::domain_error(std::string(who) + ": Q is not square-zero");
}

void require_vertex_shape(const GradedMatrix& q, const VertexOperator& a)
{
  if (static_cast<std::size_t>(a.matrix.rows()) != q.total_dim() ||
      static_cast<std::size_t>(a.matrix.cols()) != q.total_dim())
    throw std::invalid_argument("vertex '" + a.label + "' does not match the dimension of F ⊗ V");
}

ComplexMatrix graded_left(const std::vector<int>& grading, const ComplexMatrix& m)
{
  ComplexMatrix out = m;
  for (std::size_t r = 0; r < grading.size(); ++r)
    if (grading[r] < 0) out.row(r) *= -1.0;
  return out;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b)
{
  return a.cwiseProduct(b.transpose()).sum();
}

Complex gaussian_trace(const ComplexMatrix& ga, const ComplexMatrix& da, int order, double sign)
{
  const GaussRule rule = gauss_hermite(order);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const ComplexMatrix e = matrix_exponential(ComplexMatrix(Complex(0.0, sign * rule.nodes[i]) * da));
    sum += rule.weights[i] * trace_product(ga, e);
  }
  return sum / std::sqrt(std::numbers::pi);
}

}  // namespace

IndexResult equivariant_index(const GradedMatrix& q, const VertexOperator& a, int order, IntegrandSign sign)
{
  if (order < 2) throw std::invalid_argument("equivariant_index: quadrature order must be at least 2");
  require_vertex_shape(q, a);
  require_square_zero(q, "equivariant_index");
  const ComplexMatrix qc = to_complex(q.q);
  const ComplexMatrix da = graded_commutator(qc, a);
  const ComplexMatrix ga = graded_left(q.grading, a.matrix);
  const double s = sign == IntegrandSign::plus ? 1.0 : -1.0;

  IndexResult result;
  result.method = IndexResult::Method::quadrature;
  result.order = order;
  result.value = gaussian_trace(ga, da, order, s);
  result.error_estimate = std::abs(result.value - gaussian_trace(ga, da, 2 * order, s));
  return result;
}

IndexResult index_series_oracle(const GradedMatrix& q, const VertexOperator& a, double tol)
{
  require_vertex_shape(q, a);
  require_square_zero(q, "index_series_oracle");
  const ComplexMatrix qc = to_complex(q.q);
  const ComplexMatrix da = graded_commutator(qc, a);
  const ComplexMatrix da2 = da * da;
  const ComplexMatrix ga = graded_left(q.grading, a.matrix);
  const double da_norm = spectral_norm(da);
  const double a_norm = spectral_norm(a.matrix);
  const double n = static_cast<double>(q.total_dim());

  IndexResult result;
  result.method = IndexResult::Method::series;
  result.converged = false;
  Complex sum = 0.0;
  ComplexMatrix power = ComplexMatrix::Identity(da.rows(), da.cols());
  double coeff = 1.0;   // 1 / (4^m m!)
  double growth = 1.0;  // ‖da‖^{2m}
  constexpr int max_terms = 200;
  for (int m = 0; m < max_terms; ++m) {
    const double bound = growth * a_norm * n * coeff;
    if (m > 0 && bound < tol) {
      result.converged = true;
      result.error_estimate = bound;
      break;
    }
    sum += (m % 2 ? -1.0 : 1.0) * coeff * trace_product(ga, power);
    result.order = m + 1;
    power = power * da2;
    coeff /= 4.0 * (m + 1);
    growth *= da_norm * da_norm;
  }
  result.value = sum;
  return result;
}

Complex jlo_component(const GradedMatrix& q, std::span<const VertexOperator> vertices, double beta)
{
  if (!(beta > 0.0)) throw std::invalid_argument("jlo_component: beta must be positive");
  if (vertices.empty()) throw std::invalid_argument("jlo_component: need at least the vertex a_0");
  for (const auto& v : vertices) require_vertex_shape(q, v);
  require_square_zero(q, "jlo_component");
  const ComplexMatrix qc = to_complex(q.q);
  ComplexMatrix product = graded_left(q.grading, vertices.front().matrix);
  double volume = 1.0;
  for (std::size_t j = 1; j < vertices.size(); ++j) {
    product = product * graded_commutator(qc, vertices[j]);
    volume *= beta / static_cast<double>(j);
  }
  return volume * product.trace();
}

// --- Jordan profile --------------------------------------------------------------

JordanProfile jordan_profile(const RationalMatrix& q)
{
  if (!q.is_square()) throw std::invalid_argument("jordan_profile: matrix not square");
  if (!(q * q).is_zero()) throw std::domain_error("jordan_profile: Q is not square-zero");
  const std::size_t r = rank_exact(q);
  return JordanProfile{q.rows(), r, r, q.rows() - 2 * r};
}

JordanProfile jordan_profile(const GradedMatrix& q)
{
  return jordan_profile(q.q);
}

// --- scan ------------------------------------------------------------------------

namespace {

ScanRow scan_row(const TensorCurve& curve, const RhoRule& rule, const Rational& lambda, const VertexOperator& a,
                 int order)
{
  ScanRow row;
  row.lambda = lambda;
  const GradedMatrix q = brst_at(curve, rule, lambda);
  row.nilpotent = nilpotency_check(q);
  row.grading_odd = is_grading_odd(q);
  row.rank = rank_exact(q.q);
  if (row.nilpotent) {
    const IndexResult r = equivariant_index(q, a, order);
    row.index = r.value;
    row.index_error = r.error_estimate;
  } else {
    row.index = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    row.index_error = std::numeric_limits<double>::quiet_NaN();
  }
  return row;
}

}  // namespace

ScanTable deformation_scan(const TensorCurve& curve, const RhoRule& rule, std::span<const Rational> grid,
                           const VertexOperator& a, int order)
{
  validate_grid(curve, grid);
  if (order < 2) throw std::invalid_argument("deformation_scan: quadrature order must be at least 2");

  ScanTable table;
  table.rows.resize(grid.size());
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < grid.size(); start += workers) {
    const std::size_t stop = std::min(grid.size(), start + workers);
    std::vector<std::future<ScanRow>> pending;
    for (std::size_t i = start; i < stop; ++i)
      pending.push_back(std::async(std::launch::async, scan_row, std::cref(curve), std::cref(rule),
                                   std::cref(grid[i]), std::cref(a), order));
    for (std::size_t i = start; i < stop; ++i) table.rows[i] = pending[i - start].get();
  }

  const ScanRow& first = table.rows.front();
  for (const auto& row : table.rows) {
    table.rank_constant = table.rank_constant && row.rank == first.rank;
    const double dev = std::abs(row.index - first.index);
    if (std::isnan(dev))
      table.max_index_deviation = std::numeric_limits<double>::quiet_NaN();
    else if (!std::isnan(table.max_index_deviation))
      table.max_index_deviation = std::max(table.max_index_deviation, dev);
  }
  return table;
}

ScanTable deformation_scan(const DeformationFamily& family, const RhoRule& rule, std::span<const Rational> grid,
                           const VertexOperator& a, int order)
{
  return deformation_scan(curve_of(family), rule, grid, a, order);
}

}  // namespace liebrst
