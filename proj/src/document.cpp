#include "liebrst/document.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liebrst {

std::string Diagnostic::to_string() const
{
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

ParseOptions ParseOptions::from_environment()
{
  ParseOptions o;
  if (const char* env = std::getenv("LIEBRST_MAX_DIM")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 63) o.max_dim = static_cast<std::size_t>(v);
  }
  return o;
}

// --- printing ----------------------------------------------------------------

namespace {

int precedence(CoeffExpr::Kind k)
{
  using K = CoeffExpr::Kind;
  switch (k) {
  case K::add:
  case K::subtract: return 1;
  case K::multiply:
  case K::divide: return 2;
  case K::negate: return 3;
  case K::power: return 4;
  default: return 5;
  }
}

void print_expr(std::ostream& os, const CoeffExpr& e, int min_prec)
{
  using K = CoeffExpr::Kind;
  const int p = precedence(e.kind);
  const bool parens = p < min_prec;
  if (parens) os << '(';
  switch (e.kind) {
  case K::literal:
  case K::name: os << e.text; break;
  case K::negate:
    os << '-';
    print_expr(os, e.children[0], 3);
    break;
  case K::add:
  case K::subtract:
    print_expr(os, e.children[0], 1);
    os << (e.kind == K::add ? " + " : " - ");
    print_expr(os, e.children[1], 2);
    break;
  case K::multiply:
  case K::divide:
    print_expr(os, e.children[0], 2);
    os << (e.kind == K::multiply ? "*" : "/");
    print_expr(os, e.children[1], 3);
    break;
  case K::power:
    print_expr(os, e.children[0], 5);
    os << '^' << e.exponent;
    break;
  }
  if (parens) os << ')';
}

}  // namespace

std::string to_string(const CoeffExpr& e)
{
  std::ostringstream os;
  print_expr(os, e, 0);
  return os.str();
}

// --- lexing --------------------------------------------------------------------

namespace {

enum class Tok { ident, number, plus, minus, star, slash, caret, lparen, rparen, equals, lbracket, rbracket, comma, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // one-based
};

struct ParseFailure {
  Diagnostic diagnostic;
};

[[noreturn]] void fail(std::size_t line, std::size_t column, std::string message)
{
  throw ParseFailure{Diagnostic{line, column, std::move(message)}};
}

bool is_ident_start(char c)
{
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c)
{
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex_line(std::string_view line, std::size_t lineno)
{
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && is_ident_char(line[j])) ++j;
      out.push_back({Tok::ident, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j < line.size() && line[j] == '.') {
        ++j;
        if (j >= line.size() || !std::isdigit(static_cast<unsigned char>(line[j])))
          fail(lineno, j + 1, "expected digits after decimal point");
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      }
      if (j < line.size() && is_ident_start(line[j])) fail(lineno, j + 1, "identifier cannot follow a number directly");
      out.push_back({Tok::number, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
    case '+': kind = Tok::plus; break;
    case '-': kind = Tok::minus; break;
    case '*': kind = Tok::star; break;
    case '/': kind = Tok::slash; break;
    case '^': kind = Tok::caret; break;
    case '(': kind = Tok::lparen; break;
    case ')': kind = Tok::rparen; break;
    case '=': kind = Tok::equals; break;
    case '[': kind = Tok::lbracket; break;
    case ']': kind = Tok::rbracket; break;
    case ',': kind = Tok::comma; break;
    default: {
      const unsigned char u = static_cast<unsigned char>(c);
      std::string shown = std::isprint(u) ? std::string(1, c) : "\\x" + std::to_string(u);
      fail(lineno, col, "unexpected character '" + shown + "'");
    }
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::end, "", line.size() + 1});
  return out;
}

bool is_basis_symbol(const std::string& s)
{
  return s.size() >= 2 && s[0] == 'e' &&
         std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

const std::set<std::string>& keywords()
{
  static const std::set<std::string> k{"algebra", "dim", "param", "const", "bracket", "rep", "in",
                                       "adjoint", "trivial", "file"};
  return k;
}

// --- evaluation ----------------------------------------------------------------

struct Environment {
  std::optional<std::string> parameter;
  std::map<std::string, Rational> constants;
};

constexpr int max_degree = 256;
constexpr std::size_t max_coefficient_bits = 1u << 16;

std::size_t max_bits(const Polynomial& p)
{
  std::size_t b = 0;
  for (const auto& c : p.coefficients()) b = std::max(b, bit_length(c));
  return b;
}

void guard_size(const Polynomial& p)
{
  if (p.degree() > max_degree) throw std::invalid_argument("polynomial degree exceeds " + std::to_string(max_degree));
  if (max_bits(p) > max_coefficient_bits) throw std::invalid_argument("coefficient too large");
}

Polynomial evaluate(const CoeffExpr& e, const Environment& env)
{
  using K = CoeffExpr::Kind;
  switch (e.kind) {
  case K::literal: return Polynomial(e.value);
  case K::name:
    if (env.parameter && *env.parameter == e.text) return Polynomial::parameter();
    if (auto it = env.constants.find(e.text); it != env.constants.end()) return Polynomial(it->second);
    throw std::invalid_argument("undeclared name '" + e.text + "'");
  case K::negate: return -evaluate(e.children[0], env);
  case K::power: {
    const Polynomial base = evaluate(e.children[0], env);
    const std::size_t bits = max_bits(base) + static_cast<std::size_t>(std::max(base.degree(), 0)) + 1;
    if (static_cast<long long>(std::max(base.degree(), 0)) * e.exponent > max_degree ||
        bits * e.exponent > max_coefficient_bits)
      throw std::invalid_argument("power too large");
    return base.pow(e.exponent);
  }
  default: break;
  }
  const Polynomial lhs = evaluate(e.children[0], env);
  const Polynomial rhs = evaluate(e.children[1], env);
  Polynomial out;
  switch (e.kind) {
  case K::add: out = lhs + rhs; break;
  case K::subtract: out = lhs - rhs; break;
  case K::multiply:
    if (lhs.degree() + rhs.degree() > max_degree || max_bits(lhs) + max_bits(rhs) > max_coefficient_bits)
      throw std::invalid_argument("product too large");
    out = lhs * rhs;
    break;
  case K::divide:
    if (!rhs.is_constant()) throw std::invalid_argument("division by a non-constant expression");
    if (rhs.is_zero()) throw std::invalid_argument("division by zero");
    out = lhs * Polynomial(Rational(1 / rhs.coefficient(0)));
    break;
  default: break;
  }
  guard_size(out);
  return out;
}

// --- parsing ---------------------------------------------------------------------

class LineParser {
public:
  LineParser(std::vector<Token> tokens, std::size_t lineno, const Environment& env, const ParseOptions& opts)
      : toks_(std::move(tokens)), line_(lineno), env_(env), opts_(opts)
  {
  }

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }

  [[noreturn]] void error(const Token& t, const std::string& msg) const { fail(line_, t.column, msg); }

  const Token& expect(Tok k, const std::string& what)
  {
    if (!at(k)) error(peek(), "expected " + what + (peek().kind == Tok::end ? " before end of line" : ", found '" + peek().text + "'"));
    return next();
  }

  void expect_end()
  {
    if (!at(Tok::end)) error(peek(), "unexpected '" + peek().text + "'");
  }

  std::size_t expect_count(const std::string& what)
  {
    const Token& t = expect(Tok::number, what);
    if (t.text.find('.') != std::string::npos || t.text.size() > 9) error(t, what + " must be a small integer");
    return static_cast<std::size_t>(std::stoul(t.text));
  }

  /// Expression and its value; names are resolved against the environment.
  CoeffExpr expression(bool allow_parameter)
  {
    const Token& start = peek();
    allow_parameter_ = allow_parameter;
    CoeffExpr e = sum();
    try {
      (void)evaluate(e, env_);
    } catch (const std::invalid_argument& ex) {
      error(start, ex.what());
    }
    return e;
  }

  Polynomial value_of(const CoeffExpr& e) const { return evaluate(e, env_); }

  bool at_basis() const { return at(Tok::ident) && is_basis_symbol(peek().text); }

private:
  struct DepthGuard {
    LineParser& p;
    explicit DepthGuard(LineParser& parser, const Token& where) : p(parser)
    {
      if (++p.depth_ > p.opts_.max_depth) p.error(where, "expression nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
  };

  static CoeffExpr binary(CoeffExpr::Kind kind, CoeffExpr lhs, CoeffExpr rhs)
  {
    CoeffExpr e;
    e.kind = kind;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  CoeffExpr sum()
  {
    CoeffExpr lhs = product();
    while (at(Tok::plus) || at(Tok::minus)) {
      const auto kind = next().kind == Tok::plus ? CoeffExpr::Kind::add : CoeffExpr::Kind::subtract;
      lhs = binary(kind, std::move(lhs), product());
    }
    return lhs;
  }

  CoeffExpr product()
  {
    CoeffExpr lhs = unary();
    while (at(Tok::star) || at(Tok::slash)) {
      if (at(Tok::star) && peek(1).kind == Tok::ident && is_basis_symbol(peek(1).text)) break;
      const auto kind = next().kind == Tok::star ? CoeffExpr::Kind::multiply : CoeffExpr::Kind::divide;
      lhs = binary(kind, std::move(lhs), unary());
    }
    return lhs;
  }

  CoeffExpr unary()
  {
    if (at(Tok::minus)) {
      const Token& t = next();
      DepthGuard guard(*this, t);
      CoeffExpr e;
      e.kind = CoeffExpr::Kind::negate;
      e.children.push_back(unary());
      return e;
    }
    return power();
  }

  CoeffExpr power()
  {
    CoeffExpr base = primary();
    if (!at(Tok::caret)) return base;
    next();
    const Token& t = expect(Tok::number, "integer exponent");
    if (t.text.find('.') != std::string::npos) error(t, "exponent must be a nonnegative integer");
    if (t.text.size() > 6 || std::stoul(t.text) > opts_.max_exponent)
      error(t, "exponent exceeds " + std::to_string(opts_.max_exponent));
    CoeffExpr e;
    e.kind = CoeffExpr::Kind::power;
    e.exponent = static_cast<unsigned>(std::stoul(t.text));
    e.children.push_back(std::move(base));
    return e;
  }

  CoeffExpr primary()
  {
    const Token& t = peek();
    switch (t.kind) {
    case Tok::number: {
      next();
      CoeffExpr e;
      e.kind = CoeffExpr::Kind::literal;
      e.text = t.text;
      e.value = parse_rational(t.text);
      return e;
    }
    case Tok::ident: {
      if (is_basis_symbol(t.text)) error(t, "basis symbol '" + t.text + "' cannot appear inside a coefficient");
      const bool is_param = env_.parameter && *env_.parameter == t.text;
      if (is_param && !allow_parameter_) error(t, "'" + t.text + "' is the parameter; a constant value is required here");
      if (!is_param && !env_.constants.count(t.text)) error(t, "undeclared name '" + t.text + "'");
      next();
      CoeffExpr e;
      e.kind = CoeffExpr::Kind::name;
      e.text = t.text;
      return e;
    }
    case Tok::lparen: {
      next();
      DepthGuard guard(*this, t);
      CoeffExpr e = sum();
      expect(Tok::rparen, "')'");
      return e;
    }
    case Tok::end: error(t, "expected an expression before end of line");
    default: error(t, "expected an expression, found '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  const Environment& env_;
  const ParseOptions& opts_;
  std::size_t depth_ = 0;
  bool allow_parameter_ = true;
};

std::string trim(std::string_view s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

void check_fresh_name(const LineParser& p, const Token& t, const Environment& env)
{
  if (is_basis_symbol(t.text)) p.error(t, "'" + t.text + "' is reserved for basis elements");
  if (keywords().count(t.text)) p.error(t, "'" + t.text + "' is a keyword");
  if (env.parameter && *env.parameter == t.text) p.error(t, "'" + t.text + "' is already the parameter");
  if (env.constants.count(t.text)) p.error(t, "constant '" + t.text + "' declared twice");
}

AlgebraDocument parse_document(std::string_view text, const ParseOptions& opts)
{
  AlgebraDocument doc;
  Environment env;
  bool have_name = false, have_dim = false;
  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
  std::size_t lineno = 0;
  std::size_t last_line = 1;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view raw = text.substr(start, stop - start);
    start = stop + 1;
    ++lineno;
    last_line = lineno;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) {
      if (stop == text.size()) break;
      continue;
    }

    LineParser p(lex_line(raw, lineno), lineno, env, opts);
    const Token& head = p.peek();
    if (head.kind != Tok::ident) p.error(head, "expected a clause keyword");
    const std::string keyword = head.text;
    p.next();

    if (keyword == "algebra") {
      if (have_name) p.error(head, "duplicate 'algebra' clause");
      const Token& name = p.expect(Tok::ident, "algebra name");
      p.expect_end();
      doc.name = name.text;
      have_name = true;
    } else if (keyword == "dim") {
      if (have_dim) p.error(head, "duplicate 'dim' clause");
      const Token& t = p.peek();
      const std::size_t n = p.expect_count("dimension");
      if (n < 1) p.error(t, "dimension must be at least 1");
      if (n > opts.max_dim) p.error(t, "dimension " + std::to_string(n) + " exceeds the limit " + std::to_string(opts.max_dim) + " (LIEBRST_MAX_DIM)");
      p.expect_end();
      doc.dim = n;
      have_dim = true;
    } else if (keyword == "param") {
      if (doc.parameter) p.error(head, "duplicate 'param' clause");
      const Token& name = p.expect(Tok::ident, "parameter name");
      check_fresh_name(p, name, env);
      const Token& in = p.expect(Tok::ident, "'in'");
      if (in.text != "in") p.error(in, "expected 'in'");
      p.expect(Tok::lbracket, "'['");
      const Token& lo_tok = p.peek();
      const Rational lo = p.value_of(p.expression(false)).coefficient(0);
      p.expect(Tok::comma, "','");
      const Rational hi = p.value_of(p.expression(false)).coefficient(0);
      p.expect(Tok::rbracket, "']'");
      p.expect_end();
      if (hi < lo) p.error(lo_tok, "empty parameter interval");
      doc.parameter = ParameterDecl{name.text, lo, hi};
      env.parameter = name.text;
    } else if (keyword == "const") {
      if (p.at(Tok::end)) p.error(p.peek(), "expected NAME=VALUE");
      while (!p.at(Tok::end)) {
        const Token& name = p.expect(Tok::ident, "constant name");
        check_fresh_name(p, name, env);
        p.expect(Tok::equals, "'='");
        CoeffExpr e = p.expression(false);
        Rational v = p.value_of(e).coefficient(0);
        env.constants[name.text] = v;
        doc.constants.push_back(ConstantDecl{name.text, std::move(e), std::move(v)});
      }
    } else if (keyword == "bracket") {
      if (!have_dim) p.error(head, "'dim' must be declared before brackets");
      const Token& ti = p.peek();
      const std::size_t i = p.expect_count("first index");
      const Token& tj = p.peek();
      const std::size_t j = p.expect_count("second index");
      if (i < 1 || i > doc.dim) p.error(ti, "index " + std::to_string(i) + " outside 1.." + std::to_string(doc.dim));
      if (j < 1 || j > doc.dim) p.error(tj, "index " + std::to_string(j) + " outside 1.." + std::to_string(doc.dim));
      if (i >= j) p.error(ti, "bracket indices must satisfy i < j");
      if (!seen_pairs.insert({i, j}).second) p.error(ti, "bracket " + std::to_string(i) + " " + std::to_string(j) + " given twice");
      p.expect(Tok::equals, "'='");

      BracketClause clause{i, j, {}};
      if (p.at(Tok::number) && p.peek(1).kind == Tok::end && sgn(parse_rational(p.peek().text)) == 0) {
        p.next();
      } else {
        bool first = true;
        while (true) {
          bool negative = false;
          if (!first) {
            if (p.at(Tok::end)) break;
            if (!(p.at(Tok::plus) || p.at(Tok::minus))) p.error(p.peek(), "expected '+' or '-' between terms");
            negative = p.next().kind == Tok::minus;
          }
          BracketTerm term;
          if (p.at(Tok::minus) && p.peek(1).kind == Tok::ident && is_basis_symbol(p.peek(1).text)) {
            p.next();
            negative = !negative;
          }
          if (!p.at_basis()) {
            term.coefficient = p.expression(true);
            if (p.at(Tok::star)) p.next();
          }
          if (!p.at_basis()) p.error(p.peek(), p.at(Tok::end) ? "expected a basis symbol such as e1 before end of line"
                                                             : "expected a basis symbol such as e1, found '" + p.peek().text + "'");
          const Token& basis = p.next();
          const std::size_t k = basis.text.size() > 9 ? 0 : std::stoul(basis.text.substr(1));
          if (k < 1 || k > doc.dim) p.error(basis, "basis index outside 1.." + std::to_string(doc.dim));
          term.k = k;
          if (negative) {
            CoeffExpr neg;
            neg.kind = CoeffExpr::Kind::negate;
            if (term.coefficient) {
              neg.children.push_back(std::move(*term.coefficient));
            } else {
              CoeffExpr one;
              one.kind = CoeffExpr::Kind::literal;
              one.text = "1";
              one.value = 1;
              neg.children.push_back(std::move(one));
            }
            term.coefficient = std::move(neg);
          }
          clause.terms.push_back(std::move(term));
          first = false;
        }
      }
      doc.brackets.push_back(std::move(clause));
    } else if (keyword == "rep") {
      if (doc.rep.kind != RepSpec::Kind::unspecified) p.error(head, "duplicate 'rep' clause");
      const Token& kind = p.expect(Tok::ident, "representation kind (adjoint, trivial, file)");
      if (kind.text == "adjoint") {
        p.expect_end();
        doc.rep.kind = RepSpec::Kind::adjoint;
      } else if (kind.text == "trivial") {
        const Token& t = p.peek();
        const std::size_t d = p.expect_count("module dimension");
        if (d < 1) p.error(t, "module dimension must be at least 1");
        p.expect_end();
        doc.rep.kind = RepSpec::Kind::trivial;
        doc.rep.dim = d;
      } else if (kind.text == "file") {
        // The path is the raw remainder of the line.
        const std::string rest = trim(raw.substr(std::min(raw.size(), kind.column - 1 + kind.text.size())));
        if (rest.empty()) p.error(p.peek(), "expected a file path");
        doc.rep.kind = RepSpec::Kind::file;
        doc.rep.path = rest;
      } else {
        p.error(kind, "unknown representation kind '" + kind.text + "'");
      }
    } else {
      p.error(head, "unknown clause '" + keyword + "'");
    }
    if (stop == text.size()) break;
  }
  if (!have_dim) fail(last_line, 1, "missing 'dim' clause");
  return doc;
}

}  // namespace

ParseOutcome parse_algebra(std::string_view text, const ParseOptions& options)
{
  try {
    return parse_document(text, options);
  } catch (const ParseFailure& f) {
    return f.diagnostic;
  } catch (const std::exception& e) {
    return Diagnostic{1, 1, std::string("internal parser error: ") + e.what()};
  }
}

std::string serialize(const AlgebraDocument& doc)
{
  std::ostringstream os;
  os << "algebra " << doc.name << '\n';
  os << "dim " << doc.dim << '\n';
  if (doc.parameter)
    os << "param " << doc.parameter->name << " in [" << to_string(doc.parameter->lo) << ", "
       << to_string(doc.parameter->hi) << "]\n";
  for (const auto& c : doc.constants) os << "const " << c.name << "=" << to_string(c.expr) << '\n';
  switch (doc.rep.kind) {
  case RepSpec::Kind::adjoint: os << "rep adjoint\n"; break;
  case RepSpec::Kind::trivial: os << "rep trivial " << doc.rep.dim << '\n'; break;
  case RepSpec::Kind::file: os << "rep file " << doc.rep.path << '\n'; break;
  case RepSpec::Kind::unspecified: break;
  }
  for (const auto& b : doc.brackets) {
    os << "bracket " << b.i << ' ' << b.j << " =";
    if (b.terms.empty()) os << " 0";
    for (std::size_t t = 0; t < b.terms.size(); ++t) {
      os << (t ? " + " : " ");
      if (b.terms[t].coefficient) {
        std::ostringstream coeff;
        print_expr(coeff, *b.terms[t].coefficient, 0);
        os << coeff.str() << ' ';
      }
      os << 'e' << b.terms[t].k;
    }
    os << '\n';
  }
  return os.str();
}

DeformationFamily to_family(const AlgebraDocument& doc)
{
  Environment env;
  if (doc.parameter) env.parameter = doc.parameter->name;
  for (const auto& c : doc.constants) env.constants[c.name] = c.value;
  DeformationFamily family(doc.dim, doc.parameter ? doc.parameter->name : "t",
                           doc.parameter ? doc.parameter->lo : Rational(0), doc.parameter ? doc.parameter->hi : Rational(0));
  for (const auto& b : doc.brackets) {
    if (b.i < 1 || b.j > doc.dim || b.i >= b.j) throw std::invalid_argument("to_family: bracket indices out of range");
    for (const auto& term : b.terms) {
      if (term.k < 1 || term.k > doc.dim) throw std::invalid_argument("to_family: basis index out of range");
      const Polynomial c = term.coefficient ? evaluate(*term.coefficient, env) : Polynomial(1);
      family.set_bracket(b.i - 1, b.j - 1, term.k - 1, family.component(b.i - 1, b.j - 1, term.k - 1) + c);
    }
  }
  return family;
}

nlohmann::json to_json(const AlgebraDocument& doc)
{
  nlohmann::json j;
  j["name"] = doc.name;
  j["dim"] = doc.dim;
  if (doc.parameter)
    j["parameter"] = {{"name", doc.parameter->name}, {"lo", to_string(doc.parameter->lo)}, {"hi", to_string(doc.parameter->hi)}};
  else
    j["parameter"] = nullptr;
  j["constants"] = nlohmann::json::array();
  for (const auto& c : doc.constants) j["constants"].push_back({{"name", c.name}, {"expr", to_string(c.expr)}});
  j["brackets"] = nlohmann::json::array();
  for (const auto& b : doc.brackets) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : b.terms)
      terms.push_back({{"k", t.k}, {"coefficient", t.coefficient ? nlohmann::json(to_string(*t.coefficient)) : nlohmann::json(nullptr)}});
    j["brackets"].push_back({{"i", b.i}, {"j", b.j}, {"terms", terms}});
  }
  switch (doc.rep.kind) {
  case RepSpec::Kind::unspecified: j["rep"] = nullptr; break;
  case RepSpec::Kind::adjoint: j["rep"] = {{"kind", "adjoint"}}; break;
  case RepSpec::Kind::trivial: j["rep"] = {{"kind", "trivial"}, {"dim", doc.rep.dim}}; break;
  case RepSpec::Kind::file: j["rep"] = {{"kind", "file"}, {"path", doc.rep.path}}; break;
  }
  return j;
}

AlgebraDocument document_from_json(const nlohmann::json& j, const ParseOptions& options)
{
  // The JSON mirror is rendered back into .alg text so that both inputs go
  // through one validator.
  try {
    std::ostringstream os;
    os << "algebra " << j.at("name").get<std::string>() << '\n';
    os << "dim " << j.at("dim").get<std::size_t>() << '\n';
    if (j.contains("parameter") && !j["parameter"].is_null()) {
      const auto& p = j["parameter"];
      os << "param " << p.at("name").get<std::string>() << " in [" << p.at("lo").get<std::string>() << ", "
         << p.at("hi").get<std::string>() << "]\n";
    }
    if (j.contains("constants"))
      for (const auto& c : j["constants"])
        os << "const " << c.at("name").get<std::string>() << "=" << c.at("expr").get<std::string>() << '\n';
    if (j.contains("rep") && !j["rep"].is_null()) {
      const auto& r = j["rep"];
      const std::string kind = r.at("kind").get<std::string>();
      if (kind == "trivial")
        os << "rep trivial " << r.at("dim").get<std::size_t>() << '\n';
      else if (kind == "file")
        os << "rep file " << r.at("path").get<std::string>() << '\n';
      else
        os << "rep " << kind << '\n';
    }
    if (j.contains("brackets"))
      for (const auto& b : j["brackets"]) {
        os << "bracket " << b.at("i").get<std::size_t>() << ' ' << b.at("j").get<std::size_t>() << " =";
        const auto& terms = b.at("terms");
        if (terms.empty()) os << " 0";
        bool first = true;
        for (const auto& t : terms) {
          os << (first ? " " : " + ");
          if (!t.at("coefficient").is_null()) os << '(' << t["coefficient"].get<std::string>() << ") ";
          os << 'e' << t.at("k").get<std::size_t>();
          first = false;
        }
        os << '\n';
      }
    auto outcome = parse_algebra(os.str(), options);
    if (auto* d = std::get_if<Diagnostic>(&outcome)) throw std::invalid_argument("JSON document: " + d->message);
    return std::get<AlgebraDocument>(std::move(outcome));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("JSON document: ") + e.what());
  }
}

}  // namespace liebrst
