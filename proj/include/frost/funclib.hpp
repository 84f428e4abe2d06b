#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace frost {

struct Interval {
  double lo = 0.0;
  double hi = 4.0;
};

// A differentiable scalar function on [domain.lo, domain.hi] with exact
// derivative evaluation: closed forms for the builtin families, forward-mode
// duals for parsed expressions.
struct FunctionSpec {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> fprime;
  Interval domain{0.0, 4.0};
};

// f(x) = 1 + M/lambda - (M/lambda) e^{-lambda x}, f'(x) = M e^{-lambda x}.
// The constant term keeps f > 0 on all of [0, inf). Requires M in (0, 1]
// and lambda > 0.
FunctionSpec make_exp_decay_spec(double M, double lambda,
                                 Interval domain = {});

// f(x) = M x + 1, f' = M. Requires M in (0, 1].
FunctionSpec make_linear_spec(double M, Interval domain = {});

// f(x) = x^2, f'(x) = 2x.
FunctionSpec make_quadratic_spec(Interval domain = {});

// Parses `text` with the expression grammar (see exprlang.hpp) and probes
// f and f' at three interior points of `domain`, so a malformed or
// undefined expression fails here rather than mid-sweep.
FunctionSpec make_expression_spec(std::string_view text, Interval domain = {});

// Descriptor syntax:
//   "quadratic"
//   "linear:M=0.5"
//   "expdecay:M=0.8,lambda=1"
//   "expr:<expression text>"
FunctionSpec parse_family(std::string_view descriptor, Interval domain = {});

// Maximum of |f'(t)|^q over an evenly spaced grid of grid_n points on
// `interval`. Requires q >= 1 and grid_n >= 2; nondecreasing in grid_n for
// nested grids.
double sup_abs_derivative(const FunctionSpec& spec, Interval interval,
                          double q = 1.0, int grid_n = 2049);

}  // namespace frost
