#ifndef CONECALC_EXPR_HPP
#define CONECALC_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>

#include "conecalc/blowup.hpp"
#include "conecalc/secant.hpp"

namespace conecalc {

/// AST for the class-expression mini-language:
///   expr   := term (('+'|'-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' nat)*
///   atom   := nat ('/' nat)? | ident | 'j' '(' expr ')' | '(' expr ')'
/// '^' binds tighter than '*' binds tighter than '+'/'-'; all operators are
/// left-associative; whitespace is insignificant. Generator names are
/// validated against the selected space at evaluation time; j(...) may not
/// be nested and accepts only h1/h2 expressions.
struct Expr {
  enum class Kind { Literal, Gen, J, Add, Sub, Mul, Pow, Neg };
  Kind kind;
  Rational literal;                  // Literal
  std::string name;                  // Gen
  std::shared_ptr<const Expr> a, b;  // children
  int exponent = 0;                  // Pow
  std::size_t offset = 0;            // byte offset in the source text
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(std::string_view text);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

/// Rendering that reparses to an equal AST.
std::string expr_str(const ExprPtr& e);

MixedClass eval_blowup_expr(const ExprPtr& e, const BlowupPresentation& S);
FormalSum eval_secant_expr(const ExprPtr& e, const SecantBundleRing& ring);

MixedClass eval_blowup_expr(const std::string& text,
                            const BlowupPresentation& S);
FormalSum eval_secant_expr(const std::string& text,
                           const SecantBundleRing& ring);

}  // namespace conecalc

#endif
