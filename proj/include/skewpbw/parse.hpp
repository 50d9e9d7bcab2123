#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "skewpbw/elements.hpp"
#include "skewpbw/exponents.hpp"

namespace skewpbw {

/// Expression tree for
///   expr  := ['+'|'-'] term (('+'|'-') term)*
///   term  := unary (('*'|'/') unary)*
///   unary := '-' unary | power
///   power := primary ['^' ['-'] INT]
///   primary := INT | IDENT | '(' expr ')'
/// Identifiers are field parameters or generators x1, x2, ...
struct Expr {
  enum class Kind { Number, Ident, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Number;
  Integer number;
  std::string name;
  long exponent = 0;
  std::size_t column = 0;
  std::vector<std::unique_ptr<Expr>> args;
};

/// Throws SyntaxError with the column of the offending token.
std::unique_ptr<Expr> parse_expression(std::string_view text);

/// Expression evaluated through ring arithmetic; "x2*x1" in the quantum plane
/// becomes q12*x1*x2. Division is allowed by scalars and invertible monomials
/// (multiplying on the right by the inverse).
/// Errors: SyntaxError, UnknownGenerator, UnknownIdentifier, IllegalInverse,
/// NotInvertible, DivisionByZero.
Element parse_element(std::string_view text, const PresentationPtr& p);

/// Expression with no generators, evaluated in the field.
FieldElement parse_coefficient(std::string_view text, const Field& field);

/// "lex" (dimension n), "lexK" (dimension K, must equal n when n > 0) or a
/// matrix literal "[[1,1],[0,1]]" with integer or "a/b" entries.
MonomialOrder parse_order(std::string_view text, std::size_t n = 0);

/// "(1,-2)" or "1,-2".
ExponentVector parse_exponent(std::string_view text);

/// Integer matrix literal "[[2,0],[0,1]]".
IntegerMatrix parse_integer_matrix(std::string_view text);

}  // namespace skewpbw
