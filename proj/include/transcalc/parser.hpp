#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "transcalc/rational.hpp"

namespace transcalc {

enum class AstKind {
  Number,   // rational literal
  Ident,    // x, Y, or a session binding
  Add, Sub, Mul, Div, Neg,
  Pow,      // base ^ rational literal
  Call,     // ident(args)
};

struct Ast;
using AstPtr = std::unique_ptr<Ast>;

struct Ast {
  AstKind kind;
  int pos = -1;               // byte offset in the source line
  Rat number;                 // Number; Pow exponent
  std::string name;           // Ident, Call
  std::vector<AstPtr> args;   // operands
};

struct ParsedLine {
  std::optional<std::string> assign_name;  // "name = expr" binding
  AstPtr expr;
};

/// Grammar:
///   line   := ident '=' expr | expr
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' rational)?
///   atom   := rational | ident | ident '(' args ')' | '(' expr ')'
///   rational := integer ('/' positive-integer)?
/// Reports SyntaxError with position, UnknownFunction and ArityError.
ParsedLine parse_line(const std::string& src);

AstPtr parse_expression(const std::string& src);

}  // namespace transcalc
