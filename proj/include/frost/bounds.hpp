#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frost/convexity.hpp"
#include "frost/funclib.hpp"
#include "frost/quadrature.hpp"

namespace frost {

enum class TheoremId {
  classical,
  theorem1,
  corollary1,
  corollary2,
  corollary3,
  theorem2,
  corollary4,
  corollary5,
  corollary6,
};

// Short CLI-facing names: classical, t1, c1, c2, c3, t2, c4, c5, c6.
std::string_view to_string(TheoremId id);
TheoremId parse_theorem_id(std::string_view name);

// Every symbol the bound evaluators consume. Defaults describe the midpoint
// of [0, 1] with all shape parameters pinned at their classical values.
struct Scenario {
  double a = 0.0;
  double b = 1.0;
  double x = 0.5;
  double mu = 1.0;
  double alpha = 1.0;
  double m = 1.0;
  double M = 1.0;
  double p = 1.0;
  double q = 2.0;
};

enum class SignConvention { paper_plus, corrected_minus };

// Weighted-endpoint deviation used by every fractional bound:
//   ((x-a)^mu + (b-x)^mu)/(b-a) * f(x)
//     - Gamma(mu+1)/(b-a) * [I_ax + I_xb]
// where I_ax = (1/Gamma(mu)) integral_a^x (t-a)^(mu-1) f(t) dt and
//       I_xb = (1/Gamma(mu)) integral_x^b (b-t)^(mu-1) f(t) dt.
// At mu = 1 this reduces to f(x) minus the mean of f over [a, b]. When
// x = a or x = b the vanishing-prefactor term is skipped rather than
// evaluated. `accuracy_flags`, when non-null, receives the names of any
// integrals whose error estimate missed the configured tolerance.
double lemma1_lhs(const FunctionSpec& f, const Scenario& s,
                  const QuadratureConfig& quad = {},
                  std::vector<std::string>* accuracy_flags = nullptr);

// The derivative-side representation of the same quantity:
//   T_a = (x-a)^(mu+1)/(b-a) * integral_0^1 t^mu f'(t x + (1-t) a) dt
//   T_b = (b-x)^(mu+1)/(b-a) * integral_0^1 t^mu f'(t x + (1-t) b) dt
// combined as T_a + T_b (paper_plus) or T_a - T_b (corrected_minus).
// corrected_minus reproduces lemma1_lhs; see the findings report for the
// numeric demonstration that the plus form does not.
double lemma1_rhs(const FunctionSpec& f, const Scenario& s,
                  SignConvention sign = SignConvention::corrected_minus,
                  const QuadratureConfig& quad = {},
                  std::vector<std::string>* accuracy_flags = nullptr);

// Scale constants entering the bounds. All four require alpha, m, M in
// (0, 1] and throw std::domain_error otherwise.
//
// k1 equals integral_0^1 M^(2(m + alpha t (1-m))) dt in closed form:
// M^(2m) * (e^z - 1)/z with z = 2 alpha (1-m) ln M, series fallback for
// |z| < 1e-8, and exactly 1 at M = 1.
double k1(double alpha, double m, double M);

// k2 equals integral_0^1 t^(mu p) M^(m + alpha t (1-m)) dt in closed form:
// M^m * gamma_lower(mu p + 1, z)/z^(mu p + 1) with z = alpha (m-1) ln M >= 0,
// series fallback for z < 1e-8, and 1/(mu p + 1) at M = 1. Requires mu > 0
// and p >= 0.
double k2(double alpha, double m, double M, double mu, double p);

// k3 is k2 at mu = 1.
double k3(double alpha, double m, double M, double p);

// k4 is k2 at mu = 1, p = 1, evaluated through the elementary form
// gamma_lower(2, z) = 1 - (1+z) e^(-z) (alternating series below z = 0.5),
// so it provides an independent route to the same value.
double k4(double alpha, double m, double M);

// Right-hand sides. Each validates the parameter pinning listed next to it
// and throws std::domain_error on violation.
double rhs_theorem1(const Scenario& s);               // general (alpha, m)
double rhs_corollary1(const Scenario& s);             // alpha = 1
double rhs_corollary2(const Scenario& s);             // alpha = m = 1
double rhs_corollary3(const Scenario& s);             // alpha = m = 1, mu = 1
double rhs_theorem2(const Scenario& s);               // q > 1, 0 <= p <= q
double rhs_corollary4(const Scenario& s);             // alpha = m = 1
double rhs_corollary5(const Scenario& s);             // mu = 1
double rhs_corollary6(const Scenario& s);             // mu = 1, p = 1
double rhs_classical_ostrowski(const Scenario& s, double M);

struct AuditEntry {
  std::string name;
  bool passed = true;
  double measure = 0.0;
  std::string detail;
};

struct VerifyConfig {
  QuadratureConfig quad;
  double verdict_tol = 1e-8;   // absolute slack on margin
  GridSpec audit_grid;         // membership scan density
  double audit_tol = 1e-9;     // membership / sup-bound slack
  SignConvention sign = SignConvention::corrected_minus;
  // Replaces k1/k2 by direct quadrature of their defining integrals, which
  // extends every bound to M > 1. Reports carry the flag so extended runs
  // are never mistaken for the stock bounds.
  bool exact_integral = false;
};

// Both sides of one bound, without the audits verify() adds on top.
// lemma_signed is the signed weighted-endpoint deviation backing lhs.
struct BoundSides {
  double lhs = 0.0;
  double rhs = 0.0;
  double lemma_signed = 0.0;
};

BoundSides evaluate_sides(TheoremId id, const FunctionSpec& f,
                          const Scenario& s, const VerifyConfig& cfg = {},
                          std::vector<std::string>* accuracy_flags = nullptr);

struct BoundReport {
  TheoremId theorem_id = TheoremId::classical;
  std::string function_name;
  Scenario scenario;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool holds = false;   // margin >= -verdict_tol
  // |lemma1_lhs - lemma1_rhs(sign)| under the configured sign convention.
  double identity_residual = 0.0;
  std::vector<AuditEntry> hypothesis_audit;
  bool hypothesis_ok = true;  // every audit entry passed
  std::vector<std::string> quadrature_flags;
  bool exact_integral = false;
};

// Evaluates one bound end to end: validates the scenario for the chosen
// theorem (throws std::domain_error on hard violations), measures the
// left-hand side, composes the right-hand side, and runs the hypothesis
// audit. Audit failures never abort; they are recorded so the bound can be
// probed outside its hypotheses.
BoundReport verify(TheoremId id, const FunctionSpec& f, const Scenario& s,
                   const VerifyConfig& cfg = {});

}  // namespace frost
