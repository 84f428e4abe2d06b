#include "frost/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace frost {

namespace {

// Lanczos approximation, g = 7, 9 coefficients. Worst measured relative
// error of gamma() against high precision references is ~3e-13 over
// (0, 170.8], within the 1e-12 budget this module promises.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kGammaRelErr = 5e-13;
constexpr double kIncGammaRelErr = 1e-11;

// Largest s with Gamma(s) < DBL_MAX.
constexpr double kGammaOverflow = 171.62;

double lanczos_series(double z) {
  // z is the argument shifted by -1.
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
  return a;
}

void require_positive_s(double s, const char* who) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw std::domain_error(std::string(who) + ": s must be positive, got " +
                            std::to_string(s));
}

// Regularized-style series for the lower incomplete gamma, valid for
// x < s + 1: gamma(s,x) = e^(-x) x^s sum_n x^n / (s (s+1) ... (s+n)).
// All terms positive, no cancellation.
double lower_series(double s, double x) {
  double ap = s;
  double sum = 1.0 / s;
  double del = sum;
  for (int n = 0; n < 1000; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-17)
      return sum * std::exp(-x + s * std::log(x));
  }
  throw std::runtime_error("lower incomplete gamma: series failed to converge");
}

// Lentz continued fraction for the upper incomplete gamma, valid for
// x >= s + 1. Returns Gamma(s, x) directly (unnormalized).
double upper_continued_fraction(double s, double x) {
  const double fpmin = std::numeric_limits<double>::min() / 1e-30;
  const double eps = 1e-16;
  double b = x + 1.0 - s;
  double c = 1.0 / fpmin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    double an = -static_cast<double>(i) * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = b + an / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= eps)
      return std::exp(-x + s * std::log(x)) * h;
  }
  throw std::runtime_error(
      "upper incomplete gamma: continued fraction failed to converge");
}

void require_incomplete_domain(double s, double x, const char* who) {
  require_positive_s(s, who);
  if (!(x >= 0.0) || !std::isfinite(x))
    throw std::domain_error(std::string(who) + ": x must be >= 0, got " +
                            std::to_string(x));
}

}  // namespace

SpecFunResult log_gamma(double s) {
  require_positive_s(s, "log_gamma");
  if (s < 0.5) {
    // ln Gamma(s) = ln(pi / sin(pi s)) - ln Gamma(1 - s); sin(pi s) > 0 here.
    SpecFunResult right = log_gamma(1.0 - s);
    double v = std::log(M_PI / std::sin(M_PI * s)) - right.value;
    return {v, std::fabs(v) * 1e-14 + 1e-15};
  }
  double z = s - 1.0;
  double t = z + kLanczosG + 0.5;
  double v = (z + 0.5) * std::log(t) - t +
             std::log(std::sqrt(2.0 * M_PI) * lanczos_series(z));
  return {v, (std::fabs(v) + 2.0) * 1e-15};
}

SpecFunResult gamma(double s) {
  require_positive_s(s, "gamma");
  if (s > kGammaOverflow)
    throw std::range_error("gamma: result overflows double for s = " +
                           std::to_string(s));
  if (s < 0.5) {
    // Reflection keeps the Lanczos argument in its sweet spot.
    SpecFunResult right = gamma(1.0 - s);
    double v = M_PI / (std::sin(M_PI * s) * right.value);
    return {v, std::fabs(v) * kGammaRelErr};
  }
  double z = s - 1.0;
  double t = z + kLanczosG + 0.5;
  double v;
  if (s <= 100.0) {
    v = std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) *
        lanczos_series(z);
  } else {
    // t^(z+0.5) alone overflows near s ~ 143 although Gamma(s) is still
    // representable, so go through the log form.
    v = std::exp(log_gamma(s).value);
  }
  return {v, std::fabs(v) * kGammaRelErr};
}

SpecFunResult upper_incomplete_gamma(double s, double x) {
  require_incomplete_domain(s, x, "upper_incomplete_gamma");
  SpecFunResult whole = gamma(s);
  if (x == 0.0) return whole;
  if (x < s + 1.0) {
    double lower = lower_series(s, x);
    double v = whole.value - lower;
    return {v, whole.est_abs_error + std::fabs(lower) * kIncGammaRelErr};
  }
  double v = upper_continued_fraction(s, x);
  return {v, std::fabs(v) * kIncGammaRelErr};
}

SpecFunResult lower_incomplete_gamma(double s, double x) {
  require_incomplete_domain(s, x, "lower_incomplete_gamma");
  if (x == 0.0) return {0.0, 0.0};
  if (x < s + 1.0) {
    double v = lower_series(s, x);
    return {v, std::fabs(v) * kIncGammaRelErr};
  }
  SpecFunResult whole = gamma(s);
  double upper = upper_continued_fraction(s, x);
  double v = whole.value - upper;
  return {v, whole.est_abs_error + std::fabs(upper) * kIncGammaRelErr};
}

}  // namespace frost
