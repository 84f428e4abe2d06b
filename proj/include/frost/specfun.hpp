#pragma once

#include <stdexcept>

namespace frost {

// Value plus a conservative absolute error bound (>= 0).
struct SpecFunResult {
  double value = 0.0;
  double est_abs_error = 0.0;
};

// Gamma(s) for s > 0.
// Throws std::domain_error for s <= 0 or non-finite s, std::range_error
// once the value overflows a double (s > ~171.62).
SpecFunResult gamma(double s);

// ln Gamma(s) for s > 0.
SpecFunResult log_gamma(double s);

// Upper incomplete gamma Gamma(s, x) = int_x^inf t^(s-1) e^(-t) dt for
// s > 0, x >= 0. Series below x = s + 1, Lentz continued fraction above.
SpecFunResult upper_incomplete_gamma(double s, double x);

// Lower incomplete gamma(s, x) = Gamma(s) - Gamma(s, x), same domain.
// The x < s + 1 regime is evaluated by its own all-positive series, so
// tiny x loses no precision to cancellation.
SpecFunResult lower_incomplete_gamma(double s, double x);

}  // namespace frost
