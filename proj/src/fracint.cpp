#include "frost/fracint.hpp"

#include <cmath>
#include <stdexcept>

#include "frost/specfun.hpp"

namespace frost {

namespace {

void check_order(double mu) {
  if (!(mu >= 0.0) || !std::isfinite(mu))
    throw std::domain_error("fractional order must satisfy mu >= 0");
}

IntegralResult scaled(IntegralResult r, double mu) {
  const double g = gamma(mu).value;
  r.value /= g;
  r.est_abs_error /= g;
  return r;
}

}  // namespace

IntegralResult rl_left(const FunctionSpec& f, double a, double mu, double x,
                       const QuadratureConfig& cfg) {
  check_order(mu);
  if (!(a >= 0.0)) throw std::domain_error("rl_left requires a >= 0");
  if (!(x > a)) throw std::domain_error("rl_left requires x > a");
  if (mu == 0.0) return {f.f(x), 0.0, 1};

  if (mu < 1.0) {
    IntegralResult r = integrate_power_singular(f.f, mu - 1.0, a, x,
                                                SingularEnd::upper, cfg);
    return scaled(r, mu);
  }
  IntegralResult r = integrate(
      [&f, mu, x](double t) { return std::pow(x - t, mu - 1.0) * f.f(t); }, a,
      x, cfg);
  return scaled(r, mu);
}

IntegralResult rl_right(const FunctionSpec& f, double b, double mu, double x,
                        const QuadratureConfig& cfg) {
  check_order(mu);
  if (!(x < b)) throw std::domain_error("rl_right requires x < b");
  if (mu == 0.0) return {f.f(x), 0.0, 1};

  if (mu < 1.0) {
    IntegralResult r = integrate_power_singular(f.f, mu - 1.0, x, b,
                                                SingularEnd::lower, cfg);
    return scaled(r, mu);
  }
  IntegralResult r = integrate(
      [&f, mu, x](double t) { return std::pow(t - x, mu - 1.0) * f.f(t); }, x,
      b, cfg);
  return scaled(r, mu);
}

}  // namespace frost
