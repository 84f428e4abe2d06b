#pragma once

#include <functional>
#include <optional>
#include <string_view>

namespace frost {

enum class ConvexityClass {
  m_convex,
  alpha_m_convex,
  m_log_convex,
  alpha_m_log_convex,
  starshaped,
};

std::string_view to_string(ConvexityClass c);

struct GridSpec {
  int nx = 33;
  int ny = 33;
  int nt = 33;
};

// A sampled triple violating the defining inequality. Starshapedness uses
// only (x, t); its witness carries y = x.
struct ConvexityWitness {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
};

// Verdict of a grid scan. `holds` means no sampled violation above tol; it
// is a statement about the grid, not a proof, so samples_checked is part of
// the claim. witness is present exactly when holds is false and is the
// lexicographically (x, y, t)-smallest point attaining worst_violation.
struct MembershipReport {
  ConvexityClass class_id;
  bool holds = true;
  double worst_violation = 0.0;
  std::optional<ConvexityWitness> witness;
  long samples_checked = 0;
};

inline constexpr double kDefaultMembershipTol = 1e-9;

// Checks g(t*x + m*(1-t)*y) <= g(x)^(t^alpha) * g(y)^(m*(1-t^alpha)) for all
// grid samples x, y in [0, b_dom], t in [0, 1]. Violations are measured in
// log space. Requires g > 0 at every sampled point (domain error naming the
// first offending point otherwise), b_dom > 0, alpha and m in (0, 1].
MembershipReport check_alpha_m_log_convex(
    const std::function<double(double)>& g, double b_dom, double alpha,
    double m, GridSpec grid = {}, double tol = kDefaultMembershipTol);

// The alpha = 1 specialization of the check above.
MembershipReport check_m_log_convex(const std::function<double(double)>& g,
                                    double b_dom, double m, GridSpec grid = {},
                                    double tol = kDefaultMembershipTol);

// Checks g(t*x + m*(1-t)*y) <= t^alpha * g(x) + m*(1-t^alpha) * g(y) in
// linear space. No positivity requirement.
MembershipReport check_alpha_m_convex(const std::function<double(double)>& g,
                                      double b_dom, double alpha, double m,
                                      GridSpec grid = {},
                                      double tol = kDefaultMembershipTol);

// The alpha = 1 specialization of the check above.
MembershipReport check_m_convex(const std::function<double(double)>& g,
                                double b_dom, double m, GridSpec grid = {},
                                double tol = kDefaultMembershipTol);

// Checks g(t*x) <= t * g(x) for x in [0, b_dom], t in [0, 1].
MembershipReport check_starshaped(const std::function<double(double)>& g,
                                  double b_dom, GridSpec grid = {},
                                  double tol = kDefaultMembershipTol);

}  // namespace frost
