#include "frost/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "frost/fracint.hpp"
#include "frost/numfmt.hpp"
#include "frost/specfun.hpp"

namespace frost {

namespace {

bool is_t2_family(TheoremId id) {
  return id == TheoremId::theorem2 || id == TheoremId::corollary4 ||
         id == TheoremId::corollary5 || id == TheoremId::corollary6;
}

// Theorems whose left side is f(x) minus the mean of f (all pin mu = 1
// except classical, which has no fractional order at all).
bool is_mean_based(TheoremId id) {
  return id == TheoremId::classical || id == TheoremId::corollary3 ||
         id == TheoremId::corollary5 || id == TheoremId::corollary6;
}

// Theorems whose right side goes through k1/k2/k3/k4, which are only
// defined for M in (0, 1].
bool is_k_gated(TheoremId id) {
  return id == TheoremId::theorem1 || id == TheoremId::corollary1 ||
         id == TheoremId::theorem2 || id == TheoremId::corollary5 ||
         id == TheoremId::corollary6;
}

void require(bool ok, const char* message) {
  if (!ok) throw std::domain_error(message);
}

void require_unit_interval(double v, const char* name) {
  if (!(v > 0.0) || !(v <= 1.0))
    throw std::domain_error(std::string(name) + " must lie in (0, 1]");
}

void validate_geometry(const Scenario& s) {
  require(std::isfinite(s.a) && std::isfinite(s.b) && std::isfinite(s.x) &&
              std::isfinite(s.mu),
          "scenario geometry must be finite");
  require(s.a >= 0.0, "scenario requires a >= 0");
  require(s.b > s.a, "scenario requires b > a");
  require(s.x >= s.a && s.x <= s.b, "scenario requires x in [a, b]");
  require(s.mu > 0.0, "scenario requires mu > 0");
}

void validate_scenario(TheoremId id, const Scenario& s, bool exact_integral) {
  validate_geometry(s);
  require_unit_interval(s.alpha, "alpha");
  require_unit_interval(s.m, "m");

  switch (id) {
    case TheoremId::corollary1:
      require(s.alpha == 1.0, "c1 requires alpha = 1");
      break;
    case TheoremId::corollary2:
      require(s.alpha == 1.0 && s.m == 1.0, "c2 requires alpha = m = 1");
      break;
    case TheoremId::corollary3:
      require(s.alpha == 1.0 && s.m == 1.0, "c3 requires alpha = m = 1");
      require(s.mu == 1.0, "c3 requires mu = 1");
      break;
    case TheoremId::corollary4:
      require(s.alpha == 1.0 && s.m == 1.0, "c4 requires alpha = m = 1");
      break;
    case TheoremId::corollary5:
      require(s.mu == 1.0, "c5 requires mu = 1");
      break;
    case TheoremId::corollary6:
      require(s.mu == 1.0, "c6 requires mu = 1");
      require(s.p == 1.0, "c6 requires p = 1");
      break;
    default:
      break;
  }

  if (is_t2_family(id)) {
    require(std::isfinite(s.p) && std::isfinite(s.q),
            "p and q must be finite");
    require(s.q > 1.0, "the q-norm bounds require q > 1");
    require(s.p >= 0.0 && s.p <= s.q,
            "the q-norm bounds require 0 <= p <= q");
  }

  require(std::isfinite(s.M) && s.M > 0.0, "scenario requires M > 0");
  if (id != TheoremId::classical && is_k_gated(id) && !exact_integral)
    require(s.M <= 1.0,
            "M must lie in (0, 1] for this bound; "
            "exact-integral mode lifts the restriction");
}

// (x-a)^(mu+1) + (b-x)^(mu+1)
double geom_sum(const Scenario& s) {
  return std::pow(s.x - s.a, s.mu + 1.0) + std::pow(s.b - s.x, s.mu + 1.0);
}

double holder_factor(const Scenario& s) {
  return std::pow((s.q - 1.0) / (s.mu * (s.q - s.p) + s.q - 1.0),
                  (s.q - 1.0) / s.q);
}

void note_accuracy(const IntegralResult& r, const QuadratureConfig& quad,
                   const char* name, std::vector<std::string>* flags) {
  if (flags && !accuracy_reached(r, quad)) flags->emplace_back(name);
}

// integral_0^1 M^(2(m + t^alpha (1-m))) dt; the quantity k1 upper-bounds.
double exact_k1_integral(const Scenario& s, const QuadratureConfig& quad,
                         std::vector<std::string>* flags) {
  IntegralResult r = integrate(
      [&s](double t) {
        return std::pow(s.M,
                        2.0 * (s.m + std::pow(t, s.alpha) * (1.0 - s.m)));
      },
      0.0, 1.0, quad);
  note_accuracy(r, quad, "exact_constant_integral", flags);
  return r.value;
}

// integral_0^1 t^(mu p) M^(m + t^alpha (1-m)) dt; the quantity k2
// upper-bounds. Covers k3/k4 through the mu and p pinnings.
double exact_k2_integral(const Scenario& s, const QuadratureConfig& quad,
                         std::vector<std::string>* flags) {
  IntegralResult r = integrate(
      [&s](double t) {
        return std::pow(t, s.mu * s.p) *
               std::pow(s.M, s.m + std::pow(t, s.alpha) * (1.0 - s.m));
      },
      0.0, 1.0, quad);
  note_accuracy(r, quad, "exact_constant_integral", flags);
  return r.value;
}

double compose_t1(const Scenario& s, double k) {
  return (1.0 / (2.0 * s.mu + 1.0) + k) * geom_sum(s) /
         (2.0 * (s.b - s.a));
}

double compose_t2(const Scenario& s, double k) {
  return holder_factor(s) * std::pow(k, 1.0 / s.q) * geom_sum(s) /
         (s.b - s.a);
}

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::classical: return "classical";
    case TheoremId::theorem1: return "t1";
    case TheoremId::corollary1: return "c1";
    case TheoremId::corollary2: return "c2";
    case TheoremId::corollary3: return "c3";
    case TheoremId::theorem2: return "t2";
    case TheoremId::corollary4: return "c4";
    case TheoremId::corollary5: return "c5";
    case TheoremId::corollary6: return "c6";
  }
  return "unknown";
}

TheoremId parse_theorem_id(std::string_view name) {
  if (name == "classical") return TheoremId::classical;
  if (name == "t1") return TheoremId::theorem1;
  if (name == "c1") return TheoremId::corollary1;
  if (name == "c2") return TheoremId::corollary2;
  if (name == "c3") return TheoremId::corollary3;
  if (name == "t2") return TheoremId::theorem2;
  if (name == "c4") return TheoremId::corollary4;
  if (name == "c5") return TheoremId::corollary5;
  if (name == "c6") return TheoremId::corollary6;
  throw std::domain_error("unknown theorem id '" + std::string(name) +
                          "'; expected one of classical, t1, c1, c2, c3, "
                          "t2, c4, c5, c6");
}

double lemma1_lhs(const FunctionSpec& f, const Scenario& s,
                  const QuadratureConfig& quad,
                  std::vector<std::string>* accuracy_flags) {
  validate_geometry(s);
  const double ba = s.b - s.a;
  const double weight =
      (std::pow(s.x - s.a, s.mu) + std::pow(s.b - s.x, s.mu)) / ba * f.f(s.x);

  double frac_sum = 0.0;
  if (s.x > s.a) {
    IntegralResult r = rl_right(f, s.x, s.mu, s.a, quad);
    note_accuracy(r, quad, "frac_integral_a_to_x", accuracy_flags);
    frac_sum += r.value;
  }
  if (s.x < s.b) {
    IntegralResult r = rl_left(f, s.x, s.mu, s.b, quad);
    note_accuracy(r, quad, "frac_integral_x_to_b", accuracy_flags);
    frac_sum += r.value;
  }
  return weight - gamma(s.mu + 1.0).value / ba * frac_sum;
}

double lemma1_rhs(const FunctionSpec& f, const Scenario& s,
                  SignConvention sign, const QuadratureConfig& quad,
                  std::vector<std::string>* accuracy_flags) {
  validate_geometry(s);
  const double ba = s.b - s.a;

  double term_a = 0.0;
  if (s.x > s.a) {
    IntegralResult r = integrate(
        [&f, &s](double t) {
          return std::pow(t, s.mu) * f.fprime(t * s.x + (1.0 - t) * s.a);
        },
        0.0, 1.0, quad);
    note_accuracy(r, quad, "rhs_weight_integral_a", accuracy_flags);
    term_a = std::pow(s.x - s.a, s.mu + 1.0) / ba * r.value;
  }

  double term_b = 0.0;
  if (s.x < s.b) {
    IntegralResult r = integrate(
        [&f, &s](double t) {
          return std::pow(t, s.mu) * f.fprime(t * s.x + (1.0 - t) * s.b);
        },
        0.0, 1.0, quad);
    note_accuracy(r, quad, "rhs_weight_integral_b", accuracy_flags);
    term_b = std::pow(s.b - s.x, s.mu + 1.0) / ba * r.value;
  }

  return sign == SignConvention::paper_plus ? term_a + term_b
                                            : term_a - term_b;
}

double k1(double alpha, double m, double M) {
  require_unit_interval(alpha, "alpha");
  require_unit_interval(m, "m");
  require_unit_interval(M, "M");
  if (M == 1.0) return 1.0;
  const double z = 2.0 * alpha * (1.0 - m) * std::log(M);  // <= 0
  const double scale = std::pow(M, 2.0 * m);
  // (e^z - 1)/z is 0/0 as m -> 1; the 3-term series is exact to double
  // precision for |z| < 1e-8.
  if (std::fabs(z) < 1e-8) return scale * (1.0 + z / 2.0 + z * z / 6.0);
  return scale * std::expm1(z) / z;
}

double k2(double alpha, double m, double M, double mu, double p) {
  require_unit_interval(alpha, "alpha");
  require_unit_interval(m, "m");
  require_unit_interval(M, "M");
  require(mu > 0.0, "k2 requires mu > 0");
  require(p >= 0.0, "k2 requires p >= 0");
  const double sigma = mu * p + 1.0;
  if (M == 1.0) return 1.0 / sigma;
  const double z = alpha * (m - 1.0) * std::log(M);  // >= 0
  const double scale = std::pow(M, m);
  // gamma_lower(sigma, z)/z^sigma -> 1/sigma as z -> 0.
  if (z < 1e-8)
    return scale *
           (1.0 / sigma - z / (sigma + 1.0) + z * z / (2.0 * (sigma + 2.0)));
  return scale * lower_incomplete_gamma(sigma, z).value / std::pow(z, sigma);
}

double k3(double alpha, double m, double M, double p) {
  return k2(alpha, m, M, 1.0, p);
}

double k4(double alpha, double m, double M) {
  require_unit_interval(alpha, "alpha");
  require_unit_interval(m, "m");
  require_unit_interval(M, "M");
  if (M == 1.0) return 0.5;
  const double z = alpha * (m - 1.0) * std::log(M);  // >= 0
  const double scale = std::pow(M, m);
  if (z < 0.5) {
    // gamma_lower(2, z)/z^2 = sum_n (-1)^n z^n / (n! (n+2)); alternating and
    // fast, avoiding the cancellation in 1 - (1+z)e^(-z) at small z.
    double term = 0.5;
    double sum = term;
    for (int n = 1; n < 64; ++n) {
      term *= -z * (n + 1.0) / (n * (n + 2.0));
      sum += term;
      if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return scale * sum;
  }
  return scale * (1.0 - (1.0 + z) * std::exp(-z)) / (z * z);
}

double rhs_theorem1(const Scenario& s) {
  validate_scenario(TheoremId::theorem1, s, false);
  return compose_t1(s, k1(s.alpha, s.m, s.M));
}

double rhs_corollary1(const Scenario& s) {
  validate_scenario(TheoremId::corollary1, s, false);
  return rhs_theorem1(s);
}

double rhs_corollary2(const Scenario& s) {
  validate_scenario(TheoremId::corollary2, s, false);
  return (1.0 / (2.0 * s.mu + 1.0) + s.M * s.M) * geom_sum(s) /
         (2.0 * (s.b - s.a));
}

double rhs_corollary3(const Scenario& s) {
  validate_scenario(TheoremId::corollary3, s, false);
  const double xa = s.x - s.a, bx = s.b - s.x;
  return (1.0 / 3.0 + s.M * s.M) * (xa * xa + bx * bx) /
         (2.0 * (s.b - s.a));
}

double rhs_theorem2(const Scenario& s) {
  validate_scenario(TheoremId::theorem2, s, false);
  return compose_t2(s, k2(s.alpha, s.m, s.M, s.mu, s.p));
}

double rhs_corollary4(const Scenario& s) {
  validate_scenario(TheoremId::corollary4, s, false);
  return holder_factor(s) * std::pow(s.M / (s.mu * s.p + 1.0), 1.0 / s.q) *
         geom_sum(s) / (s.b - s.a);
}

double rhs_corollary5(const Scenario& s) {
  validate_scenario(TheoremId::corollary5, s, false);
  return rhs_theorem2(s);
}

double rhs_corollary6(const Scenario& s) {
  validate_scenario(TheoremId::corollary6, s, false);
  const double xa = s.x - s.a, bx = s.b - s.x;
  return std::pow(0.5, (s.q - 1.0) / s.q) *
         std::pow(k4(s.alpha, s.m, s.M), 1.0 / s.q) * (xa * xa + bx * bx) /
         (s.b - s.a);
}

double rhs_classical_ostrowski(const Scenario& s, double M) {
  validate_geometry(s);
  require(std::isfinite(M) && M > 0.0,
          "the classical bound requires M > 0");
  const double xa = s.x - s.a, bx = s.b - s.x;
  return M / (s.b - s.a) * (xa * xa + bx * bx) / 2.0;
}

BoundSides evaluate_sides(TheoremId id, const FunctionSpec& f,
                          const Scenario& s, const VerifyConfig& cfg,
                          std::vector<std::string>* accuracy_flags) {
  validate_scenario(id, s, cfg.exact_integral);

  BoundSides sides;
  sides.lemma_signed = lemma1_lhs(f, s, cfg.quad, accuracy_flags);
  if (is_mean_based(id)) {
    IntegralResult mean = integrate(f.f, s.a, s.b, cfg.quad);
    note_accuracy(mean, cfg.quad, "mean_integral", accuracy_flags);
    sides.lhs = std::fabs(f.f(s.x) - mean.value / (s.b - s.a));
  } else {
    sides.lhs = std::fabs(sides.lemma_signed);
  }

  switch (id) {
    case TheoremId::classical:
      sides.rhs = rhs_classical_ostrowski(s, s.M);
      break;
    case TheoremId::theorem1:
    case TheoremId::corollary1:
      sides.rhs =
          cfg.exact_integral
              ? compose_t1(s, exact_k1_integral(s, cfg.quad, accuracy_flags))
              : (id == TheoremId::theorem1 ? rhs_theorem1(s)
                                           : rhs_corollary1(s));
      break;
    case TheoremId::corollary2:
      sides.rhs = rhs_corollary2(s);
      break;
    case TheoremId::corollary3:
      sides.rhs = rhs_corollary3(s);
      break;
    case TheoremId::theorem2:
    case TheoremId::corollary5:
    case TheoremId::corollary6:
      sides.rhs =
          cfg.exact_integral
              ? compose_t2(s, exact_k2_integral(s, cfg.quad, accuracy_flags))
              : (id == TheoremId::theorem2     ? rhs_theorem2(s)
                 : id == TheoremId::corollary5 ? rhs_corollary5(s)
                                               : rhs_corollary6(s));
      break;
    case TheoremId::corollary4:
      sides.rhs = rhs_corollary4(s);
      break;
  }
  return sides;
}

BoundReport verify(TheoremId id, const FunctionSpec& f, const Scenario& s,
                   const VerifyConfig& cfg) {
  BoundReport rep;
  rep.theorem_id = id;
  rep.function_name = f.name;
  rep.scenario = s;
  rep.exact_integral = cfg.exact_integral;

  std::vector<std::string> flags;
  BoundSides sides = evaluate_sides(id, f, s, cfg, &flags);
  rep.lhs = sides.lhs;
  rep.rhs = sides.rhs;

  rep.identity_residual = std::fabs(
      sides.lemma_signed - lemma1_rhs(f, s, cfg.sign, cfg.quad, &flags));

  rep.margin = rep.rhs - rep.lhs;
  rep.holds = rep.margin >= -cfg.verdict_tol;

  // Hypothesis audit. Failures are recorded, never thrown: probing a bound
  // outside its hypotheses is a supported use.
  if (id != TheoremId::classical) {
    AuditEntry e;
    e.name = "f_positive";
    double min_f = std::numeric_limits<double>::infinity();
    const int n = 201;
    for (int i = 0; i < n; ++i) {
      double t = s.a + (s.b - s.a) * (static_cast<double>(i) / (n - 1));
      min_f = std::min(min_f, f.f(t));
    }
    e.passed = min_f > 0.0;
    e.measure = min_f;
    e.detail = "min of f over a 201-point grid on [a, b] = " +
               to_sig_digits(min_f, 12);
    rep.hypothesis_audit.push_back(std::move(e));
  }

  {
    AuditEntry e;
    e.name = "derivative_bound";
    const double qeff = is_t2_family(id) ? s.q : 1.0;
    double sup = sup_abs_derivative(f, Interval{0.0, s.b}, qeff, 2049);
    e.passed = sup <= s.M + cfg.audit_tol;
    e.measure = sup;
    e.detail = "sup of |f'|^" + to_shortest_string(qeff) +
               " over [0, b] = " + to_sig_digits(sup, 12) +
               ", bound M = " + to_shortest_string(s.M);
    rep.hypothesis_audit.push_back(std::move(e));
  }

  if (id != TheoremId::classical) {
    AuditEntry e;
    e.name = "derivative_class";
    const double qeff = is_t2_family(id) ? s.q : 1.0;
    auto g = [&f, qeff](double t) {
      double d = std::fabs(f.fprime(t));
      return qeff == 1.0 ? d : std::pow(d, qeff);
    };
    try {
      MembershipReport mr = check_alpha_m_log_convex(
          g, s.b, s.alpha, s.m, cfg.audit_grid, cfg.audit_tol);
      e.passed = mr.holds;
      e.measure = mr.worst_violation;
      if (mr.holds) {
        e.detail = "|f'|^" + to_shortest_string(qeff) +
                   " passes the (alpha, m) log-convexity scan over " +
                   std::to_string(mr.samples_checked) + " samples";
      } else {
        e.detail = "worst violation " + to_sig_digits(mr.worst_violation, 12) +
                   " at (x=" + to_sig_digits(mr.witness->x, 12) +
                   ", y=" + to_sig_digits(mr.witness->y, 12) +
                   ", t=" + to_sig_digits(mr.witness->t, 12) + ")";
      }
    } catch (const std::domain_error& ex) {
      e.passed = false;
      e.measure = std::numeric_limits<double>::quiet_NaN();
      e.detail = ex.what();
    }
    rep.hypothesis_audit.push_back(std::move(e));
  }

  if (id != TheoremId::classical) {
    AuditEntry e;
    e.name = "M_in_unit_interval";
    e.passed = s.M <= 1.0;
    e.measure = s.M;
    e.detail = "the scale constants are defined for M in (0, 1]";
    rep.hypothesis_audit.push_back(std::move(e));
  }

  rep.hypothesis_ok = true;
  for (const AuditEntry& e : rep.hypothesis_audit)
    rep.hypothesis_ok = rep.hypothesis_ok && e.passed;
  rep.quadrature_flags = std::move(flags);
  return rep;
}

}  // namespace frost
