#pragma once

#include "liebrst/algebra.hpp"

#include "json.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace liebrst {

/// Coefficient expression tree. Parentheses are not kept; the printer adds
/// the ones precedence requires. Literals keep their source lexeme so that
/// printing and re-parsing reproduce the same tree.
struct CoeffExpr {
  enum class Kind { literal, name, negate, add, subtract, multiply, divide, power };
  Kind kind = Kind::literal;
  std::string text;       // literal lexeme or referenced name
  Rational value;         // literal value
  unsigned exponent = 0;  // power only
  std::vector<CoeffExpr> children;

  friend bool operator==(const CoeffExpr&, const CoeffExpr&) = default;
};

std::string to_string(const CoeffExpr& e);

struct ParameterDecl {
  std::string name;
  Rational lo, hi;
  friend bool operator==(const ParameterDecl&, const ParameterDecl&) = default;
};

struct ConstantDecl {
  std::string name;
  CoeffExpr expr;
  Rational value;
  friend bool operator==(const ConstantDecl&, const ConstantDecl&) = default;
};

struct BracketTerm {
  std::size_t k = 1;                     // one-based basis index
  std::optional<CoeffExpr> coefficient;  // absent means 1
  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

struct BracketClause {
  std::size_t i = 1, j = 2;  // one-based, i < j
  std::vector<BracketTerm> terms;
  friend bool operator==(const BracketClause&, const BracketClause&) = default;
};

struct RepSpec {
  enum class Kind { unspecified, trivial, adjoint, file };
  Kind kind = Kind::unspecified;
  std::size_t dim = 1;  // trivial only
  std::string path;     // file only
  friend bool operator==(const RepSpec&, const RepSpec&) = default;
};

/// Parse error location is one-based.
struct Diagnostic {
  std::size_t line = 1;
  std::size_t column = 1;
  std::string message;
  std::string to_string() const;
};

struct AlgebraDocument {
  std::string name = "unnamed";
  std::size_t dim = 0;
  std::optional<ParameterDecl> parameter;
  std::vector<ConstantDecl> constants;
  std::vector<BracketClause> brackets;
  RepSpec rep;

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

struct ParseOptions {
  std::size_t max_dim = 8;
  std::size_t max_depth = 200;
  unsigned max_exponent = 64;

  /// max_dim from LIEBRST_MAX_DIM when set to a positive integer.
  static ParseOptions from_environment();
};

using ParseOutcome = std::variant<AlgebraDocument, Diagnostic>;

/// Total: every input yields a document or a located diagnostic.
ParseOutcome parse_algebra(std::string_view text, const ParseOptions& options = ParseOptions::from_environment());

/// Canonical .alg text; parse_algebra(serialize(doc)) == doc.
std::string serialize(const AlgebraDocument& doc);

/// Builds the family. Without a parameter the family is constant on [0, 0].
DeformationFamily to_family(const AlgebraDocument& doc);

nlohmann::json to_json(const AlgebraDocument& doc);
/// Throws std::invalid_argument on schema or expression errors.
AlgebraDocument document_from_json(const nlohmann::json& j,
                                   const ParseOptions& options = ParseOptions::from_environment());

}  // namespace liebrst
