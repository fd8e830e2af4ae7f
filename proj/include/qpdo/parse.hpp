// Expression parser and evaluators for the CLI surfaces.
//
// Grammar (operator expressions):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ['-'] atom ['^' int]
//   atom   := int | 'q' | 'v' | 'z' | 'T' | 'E' '[' int ',' int ']'
//           | '(' expr ')'
// Explicit '*' is required between factors.  Scalar expressions additionally
// allow '/' between factors; vector expressions additionally allow the atom
// 'e' '[' int ']'.  Scalars evaluate as multiples of the identity, so a pure
// scalar expression is also a valid operator expression.

#pragma once

#include "qpdo/bilinear.hpp"
#include "qpdo/element.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpdo {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(size_t at, const std::string& msg)
      : std::runtime_error("at position " + std::to_string(at) + ": " + msg),
        pos(at) {}
};

struct ExprNode {
  enum Kind {
    IntLit,   // text holds the digits
    ScalarQ,
    ScalarV,
    ZAtom,
    TAtom,
    MatrixUnit,  // i, j
    VectorUnit,  // i (component index)
    Neg,         // child[0]
    Pow,         // child[0], exponent in `power`
    Mul,         // child[0] * child[1]
    Div,         // child[0] / child[1] (scalar mode only)
    Add,
    Sub,
  };
  Kind kind;
  std::string text;
  long power = 0;
  int i = 0, j = 0;
  size_t pos = 0;
  std::vector<std::unique_ptr<ExprNode>> child;
};

using ExprAST = std::unique_ptr<ExprNode>;

/// Parses an operator expression and validates E-indices against N.
ExprAST parse_expr(const std::string& src, int N);
/// Evaluates to a canonical Element (noncommutative order preserved).
Element eval_expr(const ExprAST& ast, int N);
Element parse_element(const std::string& src, int N);

/// Scalar expressions ('/' allowed; no z, T, E, e).
FieldElement parse_scalar(const std::string& src);

/// Vector expressions (atoms additionally include e[p]; operator factors act
/// on the vector from the left).
VectorElement parse_vector(const std::string& src, int N);

/// Parses "a" or "a/b" as a half-integer exponent; throws ParseError when
/// the denominator does not reduce to 1 or 2.  Returns twice the value.
long parse_half_integer(const std::string& src);

}  // namespace qpdo
