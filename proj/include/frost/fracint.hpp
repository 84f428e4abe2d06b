#pragma once

#include "frost/funclib.hpp"
#include "frost/quadrature.hpp"

namespace frost {

// Left-sided Riemann-Liouville integral of order mu:
//   (1/Gamma(mu)) * integral_a^x (x - t)^(mu-1) f(t) dt,  x > a >= 0.
// mu = 0 is the identity convention: returns f(x) directly, one evaluation,
// zero error estimate. Orders in (0, 1) route the kernel singularity at
// t = x through integrate_power_singular; orders >= 1 integrate directly.
// Throws std::domain_error when x <= a, a < 0, or mu < 0.
IntegralResult rl_left(const FunctionSpec& f, double a, double mu, double x,
                       const QuadratureConfig& cfg = {});

// Right-sided counterpart:
//   (1/Gamma(mu)) * integral_x^b (t - x)^(mu-1) f(t) dt,  x < b.
// Same conventions; the kernel singularity sits at t = x (lower end).
// Throws std::domain_error when x >= b or mu < 0.
IntegralResult rl_right(const FunctionSpec& f, double b, double mu, double x,
                        const QuadratureConfig& cfg = {});

}  // namespace frost
