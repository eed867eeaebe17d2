#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bochnerlab/mpoly.hpp"

namespace bochnerlab {

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := ('-')* base ('^' uint)?
// base   := rational | ident | '(' expr ')'
// No division outside rational literals like "3/2".
struct Expr {
  enum class Kind { Literal, Variable, Add, Sub, Mul, Pow, Neg };
  Kind kind;
  Rational value;          // Literal
  std::string name;        // Variable
  unsigned exponent = 0;   // Pow
  std::shared_ptr<const Expr> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse(const std::string& text, const std::vector<std::string>& allowed_vars);

MPoly to_poly(const ExprPtr& e, const ContextPtr& ctx);

// parse + to_poly over a context made from the variable list.
MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

}  // namespace bochnerlab
