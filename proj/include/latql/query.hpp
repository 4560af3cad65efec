#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "latql/algebra.hpp"
#include "latql/generalization.hpp"

namespace latql {

/// Source location of a query fragment. Lines and columns are 1-based.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  std::string where() const {
    return "query:" + std::to_string(line) + ":" + std::to_string(column);
  }
};

/// Query grammar:
///
///   query   := expr
///   expr    := name
///            | SELECT '(' expr ',' cond ')'
///            | PROJECT '(' expr ',' '[' names ']' ')'
///            | (APPOSE | SUBPOSE | GLUE | JOIN) '(' expr ',' expr ')'
///            | GENERALIZE '(' expr ',' name ',' (exists | forall | alpha) ')'
///            | APPROX '(' expr ',' '{' names '}' ';' '{' names '}' ')'
///            | BUILD '(' expr ')'
///   cond    := conj ('|' conj)*
///   conj    := unary ('&' unary)*
///   unary   := '!' atom | atom | '(' cond ')'
///   atom    := name ['=' name]
///   names   := [name (',' name)*]
///   name    := bare | '"' ( [^"\\] | '\\' ["\\] )* '"'
///
/// Bare names use letters, digits, bytes >= 0x80 and `_ . : -`.
struct QueryAst {
  enum class Op { Ref, Select, Project, Appose, Subpose, Glue, Join, Generalize, Approx, Build };

  Op op = Op::Ref;
  std::string name;                 // Ref: catalog entry; Generalize: cover
  std::vector<QueryAst> args;
  Condition condition;              // Select
  std::vector<std::string> attributes;  // Project, Approx
  std::vector<std::string> objects;     // Approx
  GeneralizationMode mode = GeneralizationMode::Exists;
  Span span;

  /// Structural equality; spans are ignored.
  friend bool operator==(const QueryAst& a, const QueryAst& b);
};

std::string to_string(QueryAst::Op op);

/// Throws SyntaxError (with `query:line:column`) on malformed input,
/// including negation over anything but an atom.
QueryAst parse_query(std::string_view text);

/// Canonical text; parse_query(pretty_print(q)) == q.
std::string pretty_print(const QueryAst& q);
std::string pretty_print(const Condition& c);

/// Quotes a name unless it is a safe bare name.
std::string quote_name(const std::string& name);

}  // namespace latql
