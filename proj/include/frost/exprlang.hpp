#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frost {

// Value of an expression together with its derivative with respect to x,
// propagated by forward-mode (dual number) arithmetic.
struct DualValue {
  double primal = 0.0;
  double tangent = 0.0;
};

// Raised by Expression::parse. position() is the byte offset into the input
// at which the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised by eval/eval_dual when the expression is undefined or not
// differentiable at the requested point.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
struct ExprNode;
}

// An arithmetic expression in one variable `x`.
//
// Grammar (version 1):
//   expr    := term  { ('+' | '-') term }
//   term    := unary { ('*' | '/') unary }
//   unary   := '-' unary | power
//   power   := primary [ '^' unary ]          (right associative)
//   primary := number | 'x' | ident '(' expr ')' | '(' expr ')'
//   ident   := 'exp' | 'ln' | 'abs' | 'sin' | 'cos' | 'sqrt'
//
// '^' binds tighter than unary minus, so -x^2 means -(x^2). Numbers are
// ordinary C++ double literals without a sign.
class Expression {
 public:
  static Expression parse(std::string_view text);

  double eval(double x) const;

  // Value and d/dx at x. Throws EvalError at points of non-differentiability
  // (abs at 0, sqrt at 0) and on domain violations.
  DualValue eval_dual(double x) const;

  // Canonical text form; parses back to an identical tree.
  std::string pretty() const;

  bool depends_on_x() const;

 private:
  explicit Expression(std::shared_ptr<const detail::ExprNode> root);
  std::shared_ptr<const detail::ExprNode> root_;
};

}  // namespace frost
