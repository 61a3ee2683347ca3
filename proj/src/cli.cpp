#include "liebrst/cli.hpp"

#include "liebrst/classify3.hpp"
#include "liebrst/csv.hpp"
#include "liebrst/document.hpp"
#include "liebrst/invariants.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace liebrst::cli {

namespace {

using nlohmann::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double x)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt(Complex z)
{
  return format_complex(z, 12);
}

json complex_json(Complex z)
{
  return {{"re", z.real()}, {"im", z.imag()}};
}

json rationals_json(const std::vector<Rational>& v)
{
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json matrix_json(const RationalMatrix& m)
{
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

struct Options {
  std::string input;
  std::string grid;
  std::string at;
  std::string rep;
  std::string vertex = "identity";
  int quad_order = 64;
  bool json = false;
  std::string dump_q;
  std::string dump_grading;
  std::string out;
  std::string csv;
};

struct Loaded {
  AlgebraDocument doc;
  DeformationFamily family;
  std::filesystem::path base_dir;
};

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Loaded load(const std::string& path)
{
  const std::string text = read_file(path);
  Loaded l;
  l.base_dir = std::filesystem::path(path).parent_path();
  if (std::filesystem::path(path).extension() == ".json") {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError(path + ": " + e.what());
    }
    try {
      l.doc = document_from_json(j);
    } catch (const std::invalid_argument& e) {
      throw InputError(path + ": " + e.what());
    }
  } else {
    auto outcome = parse_algebra(text);
    if (auto* d = std::get_if<Diagnostic>(&outcome)) throw InputError(path + ":" + d->to_string());
    l.doc = std::get<AlgebraDocument>(std::move(outcome));
  }
  l.family = to_family(l.doc);
  return l;
}

Rational sample_point(const Options& o, const Loaded& l)
{
  if (o.at.empty()) return l.family.lo();
  std::string_view value = o.at;
  if (auto eq = value.find('='); eq != std::string_view::npos) {
    const std::string_view name = value.substr(0, eq);
    if (name != l.family.parameter()) throw InputError("--at names '" + std::string(name) + "', parameter is '" + l.family.parameter() + "'");
    value = value.substr(eq + 1);
  }
  Rational t;
  try {
    t = parse_rational(value);
  } catch (const std::invalid_argument&) {
    throw InputError("--at: malformed value '" + std::string(value) + "'");
  }
  if (!l.family.contains(t)) throw InputError("--at " + to_string(t) + " lies outside [" + to_string(l.family.lo()) + ", " + to_string(l.family.hi()) + "]");
  return t;
}

std::vector<Rational> grid_points(const Options& o, const Loaded& l)
{
  std::vector<Rational> grid;
  if (o.grid.empty()) {
    if (l.doc.parameter) {
      grid = parse_grid(to_string(l.family.lo()) + ":" + to_string(l.family.hi()) + ":" +
                        (l.family.lo() == l.family.hi() ? "1" : "11"));
    } else {
      grid = {l.family.lo()};
    }
  } else {
    try {
      grid = parse_grid(o.grid);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--grid: ") + e.what());
    }
  }
  for (const auto& t : grid)
    if (!l.family.contains(t)) throw InputError("grid point " + to_string(t) + " lies outside [" + to_string(l.family.lo()) + ", " + to_string(l.family.hi()) + "]");
  return grid;
}

Representation read_rep_file(const std::filesystem::path& path, std::size_t algebra_dim)
{
  std::ifstream in(path);
  if (!in) throw InputError("cannot open representation file '" + path.string() + "'");
  std::vector<RationalMatrix> blocks;
  try {
    blocks = read_rational_csv_blocks(in);
  } catch (const std::invalid_argument& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  if (blocks.size() != algebra_dim)
    throw InputError(path.string() + ": expected " + std::to_string(algebra_dim) + " matrices, found " + std::to_string(blocks.size()));
  Representation rho;
  rho.module_dim = blocks.front().rows();
  for (const auto& b : blocks)
    if (b.rows() != rho.module_dim || b.cols() != rho.module_dim)
      throw InputError(path.string() + ": representation matrices must be square and of equal size");
  rho.generators = std::move(blocks);
  return rho;
}

RhoRule rep_rule(const Options& o, const Loaded& l)
{
  const std::size_t n = l.family.dim();
  if (o.rep.empty()) {
    switch (l.doc.rep.kind) {
    case RepSpec::Kind::adjoint: return RhoRule::adjoint();
    case RepSpec::Kind::trivial: return RhoRule::fixed_representation(Representation::trivial(n, l.doc.rep.dim));
    case RepSpec::Kind::file: {
      std::filesystem::path p = l.doc.rep.path;
      if (p.is_relative()) p = l.base_dir / p;
      return RhoRule::fixed_representation(read_rep_file(p, n));
    }
    case RepSpec::Kind::unspecified: return RhoRule::fixed_representation(Representation::trivial(n, 1));
    }
  }
  if (o.rep == "adjoint") return RhoRule::adjoint();
  if (o.rep.rfind("trivial:", 0) == 0) {
    const std::string d = o.rep.substr(8);
    if (d.empty() || d.size() > 4 || !std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; }) || std::stoul(d) == 0)
      throw InputError("--rep trivial:D needs a positive integer D");
    return RhoRule::fixed_representation(Representation::trivial(n, std::stoul(d)));
  }
  if (o.rep == "trivial") return RhoRule::fixed_representation(Representation::trivial(n, 1));
  if (o.rep.rfind("file:", 0) == 0) return RhoRule::fixed_representation(read_rep_file(o.rep.substr(5), n));
  throw InputError("--rep must be trivial:D, adjoint or file:PATH");
}

VertexOperator vertex_of(const Options& o, std::size_t n, std::size_t d)
{
  const std::string& v = o.vertex;
  if (v == "identity") return vertices::identity(n, d);
  if (v == "ghost-number") return vertices::ghost_number(n, d);
  if (v == "grading") return vertices::grading(n, d);
  if (v.rfind("c:", 0) == 0) {
    const std::string j = v.substr(2);
    if (j.empty() || j.size() > 3 || !std::all_of(j.begin(), j.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InputError("--vertex c:J needs a ghost index J");
    const std::size_t jj = std::stoul(j);
    if (jj < 1 || jj > n) throw InputError("--vertex c:" + j + " outside 1.." + std::to_string(n));
    return vertices::creation(jj - 1, n, d);
  }
  if (v.rfind("file:", 0) == 0) {
    const std::string path = v.substr(5);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open vertex file '" + path + "'");
    ComplexMatrix m;
    try {
      m = read_complex_csv(in);
    } catch (const std::invalid_argument& e) {
      throw InputError(path + ": " + e.what());
    }
    const auto grading = grading_diagonal(n, d);
    const std::size_t dim = grading.size();
    if (static_cast<std::size_t>(m.rows()) != dim || static_cast<std::size_t>(m.cols()) != dim)
      throw InputError(path + ": vertex must be " + std::to_string(dim) + "x" + std::to_string(dim));
    bool even = true, odd = true;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        if (std::abs(m(r, c)) <= 1e-10) continue;
        if (grading[r] == grading[c])
          odd = false;
        else
          even = false;
      }
    if (!even && !odd) throw InputError(path + ": vertex has no definite parity");
    return make_vertex(path, std::move(m), even ? Parity::even : Parity::odd, grading);
  }
  throw InputError("--vertex must be identity, ghost-number, grading, c:J or file:PATH");
}

void write_matrix_file(const std::string& path, const RationalMatrix& m)
{
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  write_csv(f, m);
}

std::string violation_text(const JacobiViolation& v)
{
  if (v.kind == JacobiViolation::Kind::antisymmetry)
    return "antisymmetry (" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," + std::to_string(v.k + 1) + ")";
  return "jacobi (" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," + std::to_string(v.k + 1) +
         "; m=" + std::to_string(v.m + 1) + ")";
}

// --- subcommands --------------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out)
{
  const Loaded l = load(o.input);
  const auto grid = grid_points(o, l);
  bool all_ok = true;
  json points = json::array();
  for (const auto& t : grid) {
    const JacobiReport r = jacobi_check(evaluate_family(l.family, t));
    all_ok = all_ok && r.ok;
    json vs = json::array();
    for (const auto& v : r.violations) vs.push_back(violation_text(v));
    points.push_back({{"t", to_string(t)}, {"ok", r.ok}, {"violations", vs}});
    if (!o.json) {
      out << l.family.parameter() << "=" << to_string(t) << (r.ok ? " OK" : " FAIL");
      if (!r.ok) {
        out << " " << violation_text(r.violations.front());
        if (r.violations.size() > 1) out << " and " << r.violations.size() - 1 << " more";
      }
      out << '\n';
    }
  }
  if (o.json) out << json{{"command", "verify"}, {"algebra", l.doc.name}, {"ok", all_ok}, {"points", points}}.dump(2) << '\n';
  return all_ok ? ok : math_failure;
}

int cmd_cohomology(const Options& o, std::ostream& out)
{
  const Loaded l = load(o.input);
  const Rational t = sample_point(o, l);
  const RhoRule rule = rep_rule(o, l);
  const StructureTensor f = evaluate_family(l.family, t);
  const auto dims = cohomology_dimensions(f, representation_at(rule, f));
  long long euler = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) euler += (k % 2 ? -1 : 1) * static_cast<long long>(dims[k]);
  if (o.json) {
    out << json{{"command", "cohomology"}, {"algebra", l.doc.name}, {"at", to_string(t)}, {"dims", dims}, {"euler", euler}}.dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < dims.size(); ++k) out << "H^" << k << " = " << dims[k] << '\n';
    out << "euler = " << euler << '\n';
  }
  return ok;
}

int cmd_brst(const Options& o, std::ostream& out)
{
  const Loaded l = load(o.input);
  const Rational t = sample_point(o, l);
  const RhoRule rule = rep_rule(o, l);
  const StructureTensor f = evaluate_family(l.family, t);
  const GradedMatrix q = build_brst(f, representation_at(rule, f));
  const bool nilpotent = nilpotency_check(q);
  const bool odd = is_grading_odd(q);
  const std::size_t rank = rank_exact(q.q);
  if (!o.dump_q.empty()) write_matrix_file(o.dump_q, q.q);
  if (!o.dump_grading.empty()) {
    std::ofstream g(o.dump_grading);
    if (!g) throw InputError("cannot write '" + o.dump_grading + "'");
    for (int s : q.grading) g << s << '\n';
  }
  std::optional<JordanProfile> jp;
  if (nilpotent) jp = jordan_profile(q);
  if (o.json) {
    json j{{"command", "brst"}, {"algebra", l.doc.name}, {"at", to_string(t)}, {"ghosts", q.ghosts},
           {"module_dim", q.module_dim}, {"total_dim", q.total_dim()}, {"rank", rank}, {"nilpotent", nilpotent},
           {"grading_odd", odd}};
    if (jp) j["jordan"] = {{"size2", jp->blocks_size2}, {"size1", jp->blocks_size1}};
    out << j.dump(2) << '\n';
  } else {
    out << "dim = " << q.total_dim() << " (2^" << q.ghosts << " x " << q.module_dim << ")\n";
    out << "rank = " << rank << '\n';
    out << "nilpotent = " << (nilpotent ? "yes" : "no") << '\n';
    out << "grading odd = " << (odd ? "yes" : "no") << '\n';
    if (jp) out << "jordan = " << jp->blocks_size2 << " x J2 + " << jp->blocks_size1 << " x J1\n";
  }
  return nilpotent && odd ? ok : math_failure;
}

int cmd_invariant(const Options& o, std::ostream& out)
{
  const Loaded l = load(o.input);
  const Rational t = sample_point(o, l);
  const RhoRule rule = rep_rule(o, l);
  const StructureTensor f = evaluate_family(l.family, t);
  const GradedMatrix q = build_brst(f, representation_at(rule, f));
  const VertexOperator a = vertex_of(o, q.ghosts, q.module_dim);
  if (o.quad_order < 2) throw InputError("--quad-order must be at least 2");
  const IndexResult quad = equivariant_index(q, a, o.quad_order);
  const IndexResult series = index_series_oracle(q, a);
  if (o.json) {
    out << json{{"command", "invariant"}, {"algebra", l.doc.name}, {"at", to_string(t)}, {"vertex", a.label},
                {"index", complex_json(quad.value)}, {"order", quad.order}, {"error_estimate", quad.error_estimate},
                {"series", complex_json(series.value)}, {"series_terms", series.order}, {"converged", quad.converged && series.converged}}
               .dump(2)
        << '\n';
  } else {
    out << "index = " << fmt(quad.value) << " (order " << quad.order << ", error " << fmt(quad.error_estimate) << ")\n";
    out << "series = " << fmt(series.value) << " (" << series.order << " terms)\n";
    if (!quad.converged || !series.converged) out << "warning: not converged\n";
  }
  return quad.converged && series.converged ? ok : math_failure;
}

int cmd_scan(const Options& o, std::ostream& out)
{
  const Loaded l = load(o.input);
  const auto grid = grid_points(o, l);
  const RhoRule rule = rep_rule(o, l);
  const std::size_t n = l.family.dim();
  const VertexOperator a = vertex_of(o, n, module_dim(rule, n));
  if (o.quad_order < 2) throw InputError("--quad-order must be at least 2");
  const ScanTable table = deformation_scan(l.family, rule, grid, a, o.quad_order);
  bool all_nilpotent = true;
  for (const auto& r : table.rows) all_nilpotent = all_nilpotent && r.nilpotent && r.grading_odd;

  if (!o.csv.empty()) {
    std::ofstream c(o.csv);
    if (!c) throw InputError("cannot write '" + o.csv + "'");
    c << l.family.parameter() << ",rank,index_re,index_im,index_error,nilpotent\n";
    for (const auto& r : table.rows)
      c << to_string(r.lambda) << ',' << r.rank << ',' << fmt(r.index.real()) << ',' << fmt(r.index.imag()) << ','
        << fmt(r.index_error) << ',' << (r.nilpotent ? 1 : 0) << '\n';
  }
  if (o.json) {
    json rows = json::array();
    for (const auto& r : table.rows)
      rows.push_back({{"t", to_string(r.lambda)}, {"rank", r.rank}, {"index", complex_json(r.index)},
                      {"index_error", r.index_error}, {"nilpotent", r.nilpotent}, {"grading_odd", r.grading_odd}});
    out << json{{"command", "scan"}, {"algebra", l.doc.name}, {"vertex", a.label}, {"rows", rows},
                {"rank_constant", table.rank_constant}, {"max_index_deviation", table.max_index_deviation}}
               .dump(2)
        << '\n';
  } else {
    out << l.family.parameter() << "\trank\tindex\terror\n";
    for (const auto& r : table.rows)
      out << to_string(r.lambda) << '\t' << r.rank << '\t' << fmt(r.index) << '\t' << fmt(r.index_error)
          << (r.nilpotent ? "" : "\tQ^2 != 0") << '\n';
    out << "rank constant = " << (table.rank_constant ? "yes" : "no") << '\n';
    out << "max index deviation = " << fmt(table.max_index_deviation) << '\n';
  }
  return all_nilpotent ? ok : math_failure;
}

int cmd_hypotheses(const Options& o, std::ostream& out)
{
  const Loaded l = load(o.input);
  const auto grid = grid_points(o, l);
  const RhoRule rule = rep_rule(o, l);
  const std::size_t n = l.family.dim();
  const VertexOperator a = vertex_of(o, n, module_dim(rule, n));
  const HypothesesReport r = check_hypotheses(l.family, rule, grid, a);
  const bool pass = r.nilpotent && r.grading_odd && r.h3_ok && r.h4_ok;
  if (o.json) {
    json h4 = json::array();
    for (std::size_t k = 0; k < r.separations.size(); ++k)
      h4.push_back({{"h", r.separations[k]}, {"deviation", r.deviations[k]}, {"ratio", k < r.ratios.size() ? json(r.ratios[k]) : json(nullptr)}});
    out << json{{"command", "hypotheses"},
                {"algebra", l.doc.name},
                {"base_point", to_string(r.grid.front())},
                {"nilpotent", r.nilpotent},
                {"grading_odd", r.grading_odd},
                {"symmetry_defect", r.symmetry_defect},
                {"self_adjoint", r.self_adjoint},
                {"max_w_norm", r.max_w_norm},
                {"w_symmetric", r.w_symmetric},
                {"a", r.a},
                {"b", r.b},
                {"sup_w_norm_sq", r.sup_w_norm_sq},
                {"min_anticommutator_eigen", r.min_anticommutator_eigen},
                {"h3_ok", r.h3_ok},
                {"difference_quotient", h4},
                {"h4_ok", r.h4_ok},
                {"m_bound", r.m_bound}}
               .dump(2)
        << '\n';
  } else {
    out << "base point = " << to_string(r.grid.front()) << '\n';
    out << "nilpotent = " << (r.nilpotent ? "yes" : "no") << '\n';
    out << "grading odd = " << (r.grading_odd ? "yes" : "no") << '\n';
    out << "self-adjoint = " << (r.self_adjoint ? "yes" : "no") << " (defect " << fmt(r.symmetry_defect) << ")\n";
    out << "max |W| = " << fmt(r.max_w_norm) << '\n';
    out << "a = " << fmt(r.a) << ", b = " << fmt(r.b) << " (sup |W|^2 = " << fmt(r.sup_w_norm_sq)
        << ", min eigen = " << fmt(r.min_anticommutator_eigen) << ")\n";
    out << "relative bound = " << (r.h3_ok ? "ok" : "fails") << '\n';
    for (std::size_t k = 0; k < r.separations.size(); ++k) {
      out << "h = " << fmt(r.separations[k]) << "  deviation = " << fmt(r.deviations[k]);
      if (k < r.ratios.size()) out << "  ratio = " << fmt(r.ratios[k]);
      out << '\n';
    }
    out << "difference quotient = " << (r.h4_ok ? "linear" : "not linear") << '\n';
    out << "M = " << fmt(r.m_bound) << '\n';
  }
  return pass ? ok : math_failure;
}

int cmd_classify3(const Options& o, std::ostream& out)
{
  const Loaded l = load(o.input);
  if (l.family.dim() != 3) throw InputError("classify3 needs a 3-dimensional algebra");
  const Rational t = sample_point(o, l);
  const StructureTensor f = evaluate_family(l.family, t);
  if (!jacobi_check(f).ok) {
    if (!o.json) out << "not a Lie algebra at " << l.family.parameter() << "=" << to_string(t) << '\n';
    else out << json{{"command", "classify3"}, {"ok", false}}.dump(2) << '\n';
    return math_failure;
  }
  const BehrData d = extract_na(f);
  const BianchiLabel b = bianchi_signature(d);
  const std::vector<Rational> a(d.a.begin(), d.a.end());
  if (o.json) {
    json j{{"command", "classify3"}, {"algebra", l.doc.name}, {"at", to_string(t)}, {"n", matrix_json(d.n)},
           {"a", rationals_json(a)}, {"rank", b.rank}, {"signature", {b.positive, b.negative, b.zero}}, {"type", b.label}};
    j["h"] = b.h ? json(to_string(*b.h)) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "n = [";
    for (std::size_t r = 0; r < 3; ++r) {
      out << (r ? "; " : "");
      for (std::size_t c = 0; c < 3; ++c) out << (c ? " " : "") << to_string(d.n(r, c));
    }
    out << "]\na = (" << to_string(d.a[0]) << ", " << to_string(d.a[1]) << ", " << to_string(d.a[2]) << ")\n";
    out << "signature = (" << b.positive << "," << b.negative << "," << b.zero << ")\n";
    if (b.h) out << "h = " << to_string(*b.h) << '\n';
    out << "type " << b.label << '\n';
  }
  return ok;
}

int cmd_derivations(const Options& o, std::ostream& out)
{
  const Loaded l = load(o.input);
  const Rational t = sample_point(o, l);
  const StructureTensor f = evaluate_family(l.family, t);
  if (!jacobi_check(f).ok) throw std::domain_error("structure tensor fails the Jacobi identity");
  const DerivationSpace der = derivation_space(f);
  if (o.json) {
    json basis = json::array();
    for (const auto& m : der.basis) basis.push_back(matrix_json(m));
    out << json{{"command", "derivations"}, {"algebra", l.doc.name}, {"at", to_string(t)}, {"dimension", der.dimension}, {"basis", basis}}.dump(2) << '\n';
  } else {
    out << "dim Der = " << der.dimension << '\n';
    for (std::size_t b = 0; b < der.basis.size(); ++b) {
      out << "# D" << b + 1 << '\n';
      write_csv(out, der.basis[b]);
    }
  }
  return ok;
}

}  // namespace

std::vector<Rational> parse_grid(std::string_view spec)
{
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string_view::npos || spec.find(':', c2 + 1) != std::string_view::npos)
    throw std::invalid_argument("grid must read a:b:k");
  const Rational a = parse_rational(spec.substr(0, c1));
  const Rational b = parse_rational(spec.substr(c1 + 1, c2 - c1 - 1));
  const std::string_view ks = spec.substr(c2 + 1);
  if (ks.empty() || ks.size() > 6 || !std::all_of(ks.begin(), ks.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("grid count must be a positive integer");
  const std::size_t k = std::stoul(std::string(ks));
  if (k == 0) throw std::invalid_argument("grid count must be a positive integer");
  if (k == 1) {
    if (a != b) throw std::invalid_argument("a single grid point needs a = b");
    return {a};
  }
  if (!(a < b)) throw std::invalid_argument("grid needs a < b when k > 1");
  std::vector<Rational> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rational t = a + (b - a) * Rational(static_cast<long>(i), static_cast<long>(k - 1));
    t.canonicalize();
    out.push_back(std::move(t));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact BRST and index computations for finite-dimensional Lie algebras", "liebrst"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    std::function<int(const Options&, std::ostream&)> fn;
    bool grid, at, rep, vertex, quad, dumps, csv;
  };
  const std::vector<Command> commands{
      {"verify", "Jacobi identity over a grid", cmd_verify, true, false, false, false, false, false, false},
      {"cohomology", "Lie algebra cohomology dimensions at one sample", cmd_cohomology, false, true, true, false, false, false, false},
      {"brst", "Build the BRST operator and check nilpotency", cmd_brst, false, true, true, false, false, true, false},
      {"invariant", "Equivariant index at one sample", cmd_invariant, false, true, true, true, true, false, false},
      {"scan", "Rank and index along a deformation", cmd_scan, true, false, true, true, true, false, true},
      {"hypotheses", "Check the analytic hypotheses on a grid", cmd_hypotheses, true, false, true, true, false, false, false},
      {"classify3", "Bianchi-Behr type of a 3-dimensional algebra", cmd_classify3, false, true, false, false, false, false, false},
      {"derivations", "Derivation space at one sample", cmd_derivations, false, true, false, false, false, false, false},
  };

  std::string out_path;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("input", o.input, "Algebra document (.alg or .json)")->required();
    if (c.grid) sub->add_option("--grid", o.grid, "Samples a:b:k");
    if (c.at) sub->add_option("--at", o.at, "Sample point NAME=VALUE");
    if (c.rep) sub->add_option("--rep", o.rep, "trivial:D, adjoint or file:PATH");
    if (c.vertex) sub->add_option("--vertex", o.vertex, "identity, ghost-number, grading, c:J or file:PATH");
    if (c.quad) sub->add_option("--quad-order", o.quad_order, "Gauss-Hermite order");
    if (c.dumps) {
      sub->add_option("--dump-q", o.dump_q, "Write Q as CSV");
      sub->add_option("--dump-grading", o.dump_grading, "Write the grading diagonal");
    }
    if (c.csv) sub->add_option("--csv", o.csv, "Write the table as CSV");
    sub->add_flag("--json", o.json, "Machine-readable output");
    sub->add_option("--out", out_path, "Write the report to a file");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  const Command* chosen = nullptr;
  for (const auto& c : commands)
    if (app.got_subcommand(c.name)) chosen = &c;

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot write '" << out_path << "'\n";
      return input_error;
    }
  }
  std::ostream& report = out_path.empty() ? out : file;

  try {
    return chosen->fn(o, report);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const std::domain_error& e) {
    err << "failure: " << e.what() << '\n';
    return math_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
}

}  // namespace liebrst::cli
