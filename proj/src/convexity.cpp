#include "frost/convexity.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace frost {

namespace {

using RealFn = std::function<double(double)>;

void check_common(double b_dom, const GridSpec& grid, double tol) {
  if (!(b_dom > 0.0) || !std::isfinite(b_dom))
    throw std::domain_error("membership check requires b_dom > 0");
  if (grid.nx < 2 || grid.ny < 2 || grid.nt < 2)
    throw std::domain_error("membership grid needs at least 2 points per axis");
  if (!(tol >= 0.0)) throw std::domain_error("membership tol must be >= 0");
}

void check_unit_interval(double v, const char* name) {
  if (!(v > 0.0) || !(v <= 1.0))
    throw std::domain_error(std::string("membership check requires ") + name +
                            " in (0, 1]");
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = lo + (hi - lo) * (static_cast<double>(i) / (n - 1));
  return out;
}

double require_positive_sample(const RealFn& g, double at) {
  double v = g(at);
  if (!(v > 0.0))
    throw std::domain_error(
        "log-convexity check requires g > 0; violated at x = " +
        std::to_string(at));
  return v;
}

struct Scan {
  double worst = -std::numeric_limits<double>::infinity();
  ConvexityWitness argmax;
  long samples = 0;

  void feed(double violation, double x, double y, double t) {
    ++samples;
    if (violation > worst) {
      worst = violation;
      argmax = {x, y, t};
    }
  }

  MembershipReport finish(ConvexityClass id, double tol) const {
    MembershipReport r;
    r.class_id = id;
    r.worst_violation = worst > 0.0 ? worst : 0.0;
    r.holds = r.worst_violation <= tol;
    if (!r.holds) r.witness = argmax;
    r.samples_checked = samples;
    return r;
  }
};

MembershipReport scan_triple(ConvexityClass id, const RealFn& g, double b_dom,
                             double alpha, double m, GridSpec grid, double tol,
                             bool log_space) {
  check_common(b_dom, grid, tol);
  check_unit_interval(alpha, "alpha");
  check_unit_interval(m, "m");

  const std::vector<double> xs = linspace(0.0, b_dom, grid.nx);
  const std::vector<double> ys = linspace(0.0, b_dom, grid.ny);
  const std::vector<double> ts = linspace(0.0, 1.0, grid.nt);

  std::vector<double> gx(xs.size()), gy(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    gx[i] = log_space ? std::log(require_positive_sample(g, xs[i])) : g(xs[i]);
  for (std::size_t j = 0; j < ys.size(); ++j)
    gy[j] = log_space ? std::log(require_positive_sample(g, ys[j])) : g(ys[j]);

  std::vector<double> talpha(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k)
    talpha[k] = std::pow(ts[k], alpha);

  Scan scan;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      for (std::size_t k = 0; k < ts.size(); ++k) {
        const double t = ts[k];
        const double z = t * xs[i] + m * (1.0 - t) * ys[j];
        assert(z >= 0.0 &&
               z <= b_dom * (1.0 + 16.0 * std::numeric_limits<double>::epsilon()));
        double lhs = log_space ? std::log(require_positive_sample(g, z)) : g(z);
        double rhs = talpha[k] * gx[i] + m * (1.0 - talpha[k]) * gy[j];
        scan.feed(lhs - rhs, xs[i], ys[j], t);
      }
    }
  }
  return scan.finish(id, tol);
}

}  // namespace

std::string_view to_string(ConvexityClass c) {
  switch (c) {
    case ConvexityClass::m_convex: return "m_convex";
    case ConvexityClass::alpha_m_convex: return "alpha_m_convex";
    case ConvexityClass::m_log_convex: return "m_log_convex";
    case ConvexityClass::alpha_m_log_convex: return "alpha_m_log_convex";
    case ConvexityClass::starshaped: return "starshaped";
  }
  return "unknown";
}

MembershipReport check_alpha_m_log_convex(const RealFn& g, double b_dom,
                                          double alpha, double m,
                                          GridSpec grid, double tol) {
  return scan_triple(ConvexityClass::alpha_m_log_convex, g, b_dom, alpha, m,
                     grid, tol, true);
}

MembershipReport check_m_log_convex(const RealFn& g, double b_dom, double m,
                                    GridSpec grid, double tol) {
  MembershipReport r = scan_triple(ConvexityClass::m_log_convex, g, b_dom, 1.0,
                                   m, grid, tol, true);
  return r;
}

MembershipReport check_alpha_m_convex(const RealFn& g, double b_dom,
                                      double alpha, double m, GridSpec grid,
                                      double tol) {
  return scan_triple(ConvexityClass::alpha_m_convex, g, b_dom, alpha, m, grid,
                     tol, false);
}

MembershipReport check_m_convex(const RealFn& g, double b_dom, double m,
                                GridSpec grid, double tol) {
  return scan_triple(ConvexityClass::m_convex, g, b_dom, 1.0, m, grid, tol,
                     false);
}

MembershipReport check_starshaped(const RealFn& g, double b_dom, GridSpec grid,
                                  double tol) {
  check_common(b_dom, grid, tol);
  const std::vector<double> xs = linspace(0.0, b_dom, grid.nx);
  const std::vector<double> ts = linspace(0.0, 1.0, grid.nt);

  Scan scan;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double gxi = g(xs[i]);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const double t = ts[k];
      scan.feed(g(t * xs[i]) - t * gxi, xs[i], xs[i], t);
    }
  }
  return scan.finish(ConvexityClass::starshaped, tol);
}

}  // namespace frost
