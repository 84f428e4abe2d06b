#include "frost/quadrature.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace frost {

namespace {

// Gauss-Legendre nodes and weights on (-1, 1), computed by Newton iteration
// on the Legendre recurrence. Built once per integrate() call; no shared
// state, so concurrent integrations stay independent.
struct GaussRule {
  std::vector<double> node;
  std::vector<double> weight;

  explicit GaussRule(int n) : node(n), weight(n) {
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
      double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p1 = 1.0, p2 = 0.0;
        for (int j = 0; j < n; ++j) {
          double p3 = p2;
          p2 = p1;
          p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
        }
        pp = n * (z * p1 - p2) / (z * z - 1.0);
        double z1 = z;
        z = z1 - p1 / pp;
        if (std::fabs(z - z1) < 1e-15) break;
      }
      node[i] = -z;
      node[n - 1 - i] = z;
      weight[i] = 2.0 / ((1.0 - z * z) * pp * pp);
      weight[n - 1 - i] = weight[i];
    }
  }
};

class Adaptive {
 public:
  Adaptive(const Integrand& f, const QuadratureConfig& cfg)
      : f_(f), cfg_(cfg), rule_(cfg.points_per_panel) {}

  double panel(double a, double b) {
    const double mid = 0.5 * (a + b);
    const double halfwidth = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule_.node.size(); ++i) {
      double t = mid + halfwidth * rule_.node[i];
      double y = f_(t);
      ++evaluations_;
      if (!std::isfinite(y))
        throw IntegrandError("integrand returned a non-finite value", t);
      sum += rule_.weight[i] * y;
    }
    return sum * halfwidth;
  }

  // Returns {value, accumulated error estimate} for [a, b] whose one-panel
  // estimate is `coarse`, spending at most `tol` of the error budget.
  std::pair<double, double> refine(double a, double b, double coarse,
                                   double tol, int depth) {
    const double mid = 0.5 * (a + b);
    double left = panel(a, mid);
    double right = panel(mid, b);
    double fine = left + right;
    double err = std::fabs(coarse - fine);
    if (err <= tol || depth >= cfg_.max_depth) return {fine, err};
    auto l = refine(a, mid, left, 0.5 * tol, depth + 1);
    auto r = refine(mid, b, right, 0.5 * tol, depth + 1);
    return {l.first + r.first, l.second + r.second};
  }

  long evaluations() const { return evaluations_; }

 private:
  const Integrand& f_;
  const QuadratureConfig& cfg_;
  GaussRule rule_;
  long evaluations_ = 0;
};

void check_config(const QuadratureConfig& cfg) {
  if (cfg.points_per_panel < 2)
    throw std::domain_error("quadrature: points_per_panel must be >= 2");
  if (cfg.max_depth < 0)
    throw std::domain_error("quadrature: max_depth must be >= 0");
  if (!(cfg.rel_tol >= 0.0) || !(cfg.abs_tol >= 0.0))
    throw std::domain_error("quadrature: tolerances must be >= 0");
}

}  // namespace

IntegrandError::IntegrandError(const std::string& what, double abscissa)
    : std::runtime_error(what + " at t = " + std::to_string(abscissa)),
      abscissa_(abscissa) {}

bool accuracy_reached(const IntegralResult& r, const QuadratureConfig& cfg) {
  return r.est_abs_error <=
         std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(r.value));
}

IntegralResult integrate(const Integrand& f, double lo, double hi,
                         const QuadratureConfig& cfg) {
  check_config(cfg);
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::domain_error("integrate: requires finite lo <= hi");
  if (lo == hi) {
    double y = f(lo);
    if (!std::isfinite(y))
      throw IntegrandError("integrand returned a non-finite value", lo);
    return {0.0, 0.0, 1};
  }

  Adaptive adapt(f, cfg);
  double coarse = adapt.panel(lo, hi);
  double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(coarse));
  auto [value, err] = adapt.refine(lo, hi, coarse, tol, 0);

  // The budget came from the one-panel magnitude; if that was a gross
  // overestimate (cancellation), tighten once against the real magnitude.
  double tol2 = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value));
  if (tol2 < 0.25 * tol) {
    auto [v2, e2] = adapt.refine(lo, hi, coarse, tol2, 0);
    value = v2;
    err = e2;
  }
  return {value, err, adapt.evaluations()};
}

IntegralResult integrate_power_singular(const Integrand& g, double exponent,
                                        double lo, double hi,
                                        SingularEnd singular_end,
                                        const QuadratureConfig& cfg) {
  check_config(cfg);
  if (!(exponent > -1.0))
    throw std::domain_error(
        "integrate_power_singular: exponent <= -1 is not integrable");
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::domain_error(
        "integrate_power_singular: requires finite lo <= hi");
  if (lo == hi) return {0.0, 0.0, 1};

  const double beta = exponent + 1.0;
  const double upper = std::pow(hi - lo, beta);
  Integrand transformed;
  if (singular_end == SingularEnd::lower) {
    transformed = [&g, lo, beta](double u) {
      return g(lo + std::pow(u, 1.0 / beta)) / beta;
    };
  } else {
    transformed = [&g, hi, beta](double u) {
      return g(hi - std::pow(u, 1.0 / beta)) / beta;
    };
  }
  return integrate(transformed, 0.0, upper, cfg);
}

}  // namespace frost
