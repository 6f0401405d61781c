#pragma once

#include <memory>
#include <string>
#include <variant>

#include "pweyl/rational_function.hpp"

namespace pweyl {

// Expression AST for the CLI language: rational literals, zeta(m), variables
// x<i>/y<i>, unary minus, + - * /, and ^ with integer (possibly negative)
// literal exponents.
struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct ExprNode {
  struct Num {
    Rational value;
  };
  struct Zeta {
    unsigned m;
  };
  struct Var {
    VarIndex v;
  };
  struct Neg {
    ExprPtr operand;
  };
  struct Bin {
    char op;  // '+', '-', '*', '/'
    ExprPtr lhs, rhs;
  };
  struct Pow {
    ExprPtr base;
    long long exponent;
  };
  std::variant<Num, Zeta, Var, Neg, Bin, Pow> node;
  std::size_t offset = 0;  // byte offset in the source, for diagnostics
};

// Parse the expression; throws parse_error with a byte offset on bad input.
// The rank is needed to range-check variable indices at lowering time.
ExprPtr parse_expr(const std::string& src);

// Lower an AST to a rational function of the given rank. Throws parse_error
// for out-of-range variables and division_by_zero when a denominator
// vanishes identically.
RatFn lower(const ExprNode& ast, unsigned rank);

// Convenience: parse + lower.
RatFn parse_ratfn(const std::string& src, unsigned rank);

}  // namespace pweyl
