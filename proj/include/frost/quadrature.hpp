#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace frost {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_depth = 50;
  int points_per_panel = 15;  // Gauss-Legendre nodes per panel, >= 2
};

struct IntegralResult {
  double value = 0.0;
  double est_abs_error = 0.0;
  long evaluations = 0;
};

// True when est_abs_error met the configured tolerances. A false return is
// the accuracy-not-reached signal; the value is still the best available
// estimate, never silently wrong.
bool accuracy_reached(const IntegralResult& r, const QuadratureConfig& cfg);

// Thrown when the integrand produces a non-finite value.
class IntegrandError : public std::runtime_error {
 public:
  IntegrandError(const std::string& what, double abscissa);
  double abscissa() const { return abscissa_; }

 private:
  double abscissa_;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Legendre integration of f over [lo, hi], lo <= hi.
// Each panel is accepted when the whole-panel rule and the two half-panel
// rules agree within the panel's share of the error budget; otherwise the
// panel bisects, down to max_depth. Depth exhaustion inflates
// est_abs_error instead of lying about convergence.
IntegralResult integrate(const Integrand& f, double lo, double hi,
                         const QuadratureConfig& cfg = {});

enum class SingularEnd { lower, upper };

// int_lo^hi g(t) |t - c|^exponent dt where c is the endpoint named by
// singular_end and exponent > -1 (throws std::domain_error at or below -1,
// where the integral diverges). The substitution u = |t - c|^(exponent+1)
// absorbs the weight exactly:
//     (1/(exponent+1)) * int_0^(hi-lo)^(exponent+1) g(t(u)) du
// so the transformed integrand is bounded and exponents in (-1, 0] cost no
// accuracy. exponent = 0 reproduces plain integration of g.
IntegralResult integrate_power_singular(const Integrand& g, double exponent,
                                        double lo, double hi,
                                        SingularEnd singular_end,
                                        const QuadratureConfig& cfg = {});

}  // namespace frost
