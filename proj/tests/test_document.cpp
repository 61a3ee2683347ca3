#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include "liebrst/document.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace liebrst;
using oracle::frac;

namespace {

std::string slurp(const std::filesystem::path& p)
{
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> fixture_files()
{
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(LIEBRST_FIXTURES))
    if (e.path().extension() == ".alg") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraDocument parse_ok(std::string_view text)
{
  auto r = parse_algebra(text, ParseOptions{});
  if (auto* d = std::get_if<Diagnostic>(&r)) FAIL(d->to_string());
  return std::get<AlgebraDocument>(r);
}

Diagnostic parse_err(std::string_view text, const ParseOptions& options = ParseOptions{})
{
  auto r = parse_algebra(text, options);
  REQUIRE(std::holds_alternative<Diagnostic>(r));
  return std::get<Diagnostic>(r);
}

constexpr std::string_view ni2_text = "algebra ni2\n"
                                      "dim 3\n"
                                      "param t in [0,1]\n"
                                      "const l=1 m=1 alpha=1\n"
                                      "bracket 1 2 = (1+t)*l e2\n"
                                      "bracket 1 3 = (1+t+alpha*t^2)*m e3\n";

}  // namespace

TEST_CASE("ni2 document")
{
  const auto doc = parse_ok(ni2_text);
  CHECK(doc.name == "ni2");
  CHECK(doc.dim == 3);
  REQUIRE(doc.parameter.has_value());
  CHECK(doc.parameter->name == "t");
  CHECK(doc.parameter->lo == 0);
  CHECK(doc.parameter->hi == 1);
  CHECK(doc.constants.size() == 3);
  CHECK(doc.brackets.size() == 2);
  CHECK(doc.rep.kind == RepSpec::Kind::unspecified);

  const auto fam = to_family(doc);
  const auto builtin = builtin_family_ni2(1, 1, 1);
  for (int i = 0; i <= 10; ++i) CHECK(evaluate_family(fam, frac(i, 10)) == evaluate_family(builtin, frac(i, 10)));
}

TEST_CASE("small documents")
{
  const auto doc = parse_ok("dim 2\n");
  CHECK(doc.brackets.empty());
  CHECK(evaluate_family(to_family(doc), 0) == algebras::abelian(2));
  CHECK(to_family(doc).lo() == 0);
  CHECK(to_family(doc).hi() == 0);

  const auto so3 = parse_ok("dim 3\nbracket 1 2 = e3\nbracket 2 3 = e1\nbracket 1 3 = -e2\n");
  CHECK(evaluate_family(to_family(so3), 0) == algebras::so3());

  const auto combo = parse_ok("dim 3\nconst c = 3/2\nbracket 1 2 = 2 e1 - c e2 + (c - 1)^2 e3\n");
  const auto f = evaluate_family(to_family(combo), 0);
  CHECK(f.component(0, 1, 0) == 2);
  CHECK(f.component(0, 1, 1) == frac(-3, 2));
  CHECK(f.component(0, 1, 2) == frac(1, 4));
  CHECK(f.component(1, 0, 2) == frac(-1, 4));

  CHECK(parse_ok("dim 3\nrep adjoint\n").rep.kind == RepSpec::Kind::adjoint);
  CHECK(parse_ok("dim 3\nrep trivial 2\n").rep.dim == 2);
}

TEST_CASE("precedence")
{
  // ^ binds tighter than unary minus, which binds tighter than *.
  const auto doc = parse_ok("dim 2\nparam t in [0, 3]\nbracket 1 2 = -t^2 + 2*3 - 4 - 1 e1\n");
  const auto fam = to_family(doc);
  CHECK(evaluate_family(fam, 2).component(0, 1, 0) == -4 + 6 - 4 - 1);
  CHECK(evaluate_family(fam, 3).component(0, 1, 0) == -9 + 6 - 4 - 1);
}

TEST_CASE("diagnostics")
{
  struct Case {
    std::string text;
    std::size_t line, column;
  };
  const std::vector<Case> cases{
      {"dim 3\nbracket 2 2 = e1\n", 2, 9},
      {"dim 3\nbracket 1 4 = e1\n", 2, 11},
      {"dim 3\nbracket 1 2 = e4\n", 2, 15},
      {"dim 3\nbracket 1 2 = q e1\n", 2, 15},
      {"dim 3\nbracket 1 2 = (1 + e1\n", 2, 20},
      {"dim 3\nbracket 1 2 = 1 $ e1\n", 2, 17},
      {"bracket 1 2 = e3\n", 1, 1},
      {"dim 0\n", 1, 5},
      {"dim 3\nparam t in [1, 0]\n", 2, 13},
      {"dim 3\nconst a = 1\nconst a = 2\n", 3, 7},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    const auto d = parse_err(c.text);
    CHECK(d.line == c.line);
    CHECK(d.column >= 1);
    if (c.line > 1) CHECK(d.column == c.column);
    CHECK_FALSE(d.message.empty());
  }
  CHECK(parse_err("").line == 1);
  CHECK(parse_err("dim 3\nbracket 1 2 = e1\nbracket 1 2 = e2\n").line == 3);
}

TEST_CASE("round trip is a fixed point on the shipped fixtures")
{
  const auto files = fixture_files();
  REQUIRE(files.size() >= 5);
  for (const auto& path : files) {
    CAPTURE(path.string());
    const auto doc = parse_ok(slurp(path));
    const auto text = serialize(doc);
    const auto again = parse_ok(text);
    CHECK(again == doc);
    CHECK(serialize(again) == text);

    const auto j = to_json(doc);
    CHECK(document_from_json(j, ParseOptions{}) == doc);
    CHECK(document_from_json(nlohmann::json::parse(j.dump()), ParseOptions{}) == doc);
  }
}

TEST_CASE("json schema errors")
{
  CHECK_THROWS_AS(document_from_json(nlohmann::json::parse(R"({"dim": "three"})"), ParseOptions{}), std::invalid_argument);
  CHECK_THROWS_AS(document_from_json(nlohmann::json::parse(R"([1, 2])"), ParseOptions{}), std::invalid_argument);
}

TEST_CASE("dimension cap")
{
  ParseOptions small;
  small.max_dim = 4;
  CHECK(parse_err("dim 5\n", small).line == 1);
  CHECK(std::holds_alternative<AlgebraDocument>(parse_algebra("dim 4\n", small)));

  ::setenv("LIEBRST_MAX_DIM", "2", 1);
  CHECK(ParseOptions::from_environment().max_dim == 2);
  ::setenv("LIEBRST_MAX_DIM", "junk", 1);
  CHECK(ParseOptions::from_environment().max_dim == 8);
  ::unsetenv("LIEBRST_MAX_DIM");
  CHECK(ParseOptions::from_environment().max_dim == 8);
}

TEST_CASE("guards against runaway input")
{
  std::string deep = "dim 2\nbracket 1 2 = ";
  for (int i = 0; i < 5000; ++i) deep += "(";
  deep += "1";
  for (int i = 0; i < 5000; ++i) deep += ")";
  deep += " e1\n";
  CHECK(parse_err(deep).line == 2);
  CHECK(parse_err("dim 2\nparam t in [0,1]\nbracket 1 2 = t^65 e1\n").line == 3);
  CHECK(parse_err("dim 2\nparam t in [0,1]\nbracket 1 2 = 1/(t-t) e1\n").line == 3);
}

TEST_CASE("fuzz: every input yields a document or a located diagnostic")
{
  std::vector<std::string> seeds;
  for (const auto& p : fixture_files()) seeds.push_back(slurp(p));
  seeds.emplace_back(ni2_text);
  const std::string alphabet = "0123456789 \n\t+-*/^()[],=.eEtlmaxyz_#$";
  const std::vector<std::string> tokens{"algebra", "dim", "param", "const", "bracket", "rep", "in", "adjoint", "trivial",
                                        "file", "e1", "e2", "e3", "e9", "t", "=", "[", "]", ",", "(", ")", "^", "-",
                                        "+", "*", "/", "0", "1", "99999999999999999999", "1/0", "\n"};
  std::size_t documents = 0, diagnostics = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::string text;
    const long mode = oracle::uniform_int(0, 2);
    if (mode == 0) {
      text = seeds[static_cast<std::size_t>(oracle::uniform_int(0, static_cast<long>(seeds.size()) - 1))];
      const long edits = oracle::uniform_int(1, 4);
      for (long e = 0; e < edits && !text.empty(); ++e) {
        const auto pos = static_cast<std::size_t>(oracle::uniform_int(0, static_cast<long>(text.size()) - 1));
        const char c = alphabet[static_cast<std::size_t>(oracle::uniform_int(0, static_cast<long>(alphabet.size()) - 1))];
        switch (oracle::uniform_int(0, 2)) {
        case 0: text[pos] = c; break;
        case 1: text.insert(pos, 1, c); break;
        default: text.erase(pos, 1); break;
        }
      }
    } else if (mode == 1) {
      text = "dim 3\n";
      const long n = oracle::uniform_int(1, 20);
      for (long i = 0; i < n; ++i) {
        text += tokens[static_cast<std::size_t>(oracle::uniform_int(0, static_cast<long>(tokens.size()) - 1))];
        text += ' ';
      }
    } else {
      const long n = oracle::uniform_int(0, 80);
      for (long i = 0; i < n; ++i) text += static_cast<char>(oracle::uniform_int(1, 255));
    }
    const auto r = parse_algebra(text, ParseOptions{});
    if (const auto* d = std::get_if<Diagnostic>(&r)) {
      ++diagnostics;
      CHECK(d->line >= 1);
      CHECK(d->column >= 1);
      CHECK_FALSE(d->message.empty());
    } else {
      ++documents;
      const auto& doc = std::get<AlgebraDocument>(r);
      CHECK(parse_ok(serialize(doc)) == doc);
    }
  }
  CHECK(documents + diagnostics == 10000);
  CHECK(diagnostics > 0);
  CHECK(documents > 0);
}
