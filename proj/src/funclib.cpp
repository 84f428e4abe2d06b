#include "frost/funclib.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>
#include <vector>

#include "frost/exprlang.hpp"

namespace frost {

namespace {

std::string short_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

void check_domain(const Interval& domain) {
  if (!(domain.lo < domain.hi) || !std::isfinite(domain.lo) ||
      !std::isfinite(domain.hi))
    throw std::domain_error("function domain must satisfy lo < hi");
}

double parse_number(std::string_view text, const std::string& context) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("malformed number '" + std::string(text) +
                                "' in " + context);
  return value;
}

// Parses "k=v,k=v" into ordered pairs; duplicate keys rejected.
std::vector<std::pair<std::string, double>> parse_params(
    std::string_view text, const std::string& context) {
  std::vector<std::pair<std::string, double>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw std::invalid_argument("expected key=value in " + context);
    std::string key(item.substr(0, eq));
    for (const auto& p : out)
      if (p.first == key)
        throw std::invalid_argument("duplicate parameter '" + key + "' in " +
                                    context);
    out.emplace_back(key, parse_number(item.substr(eq + 1), context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double take_param(std::vector<std::pair<std::string, double>>& params,
                  const std::string& key, const std::string& context) {
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (it->first == key) {
      double v = it->second;
      params.erase(it);
      return v;
    }
  }
  throw std::invalid_argument("missing parameter '" + key + "' in " + context);
}

void reject_leftovers(const std::vector<std::pair<std::string, double>>& params,
                      const std::string& context) {
  if (!params.empty())
    throw std::invalid_argument("unknown parameter '" + params.front().first +
                                "' in " + context);
}

}  // namespace

FunctionSpec make_exp_decay_spec(double M, double lambda, Interval domain) {
  check_domain(domain);
  if (!(M > 0.0) || !(M <= 1.0))
    throw std::domain_error("expdecay requires M in (0, 1]");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::domain_error("expdecay requires lambda > 0");
  FunctionSpec spec;
  spec.name = "expdecay(M=" + short_double(M) +
              ",lambda=" + short_double(lambda) + ")";
  const double c = 1.0 + M / lambda;
  spec.f = [M, lambda, c](double x) {
    return c - (M / lambda) * std::exp(-lambda * x);
  };
  spec.fprime = [M, lambda](double x) { return M * std::exp(-lambda * x); };
  spec.domain = domain;
  return spec;
}

FunctionSpec make_linear_spec(double M, Interval domain) {
  check_domain(domain);
  if (!(M > 0.0) || !(M <= 1.0))
    throw std::domain_error("linear requires M in (0, 1]");
  FunctionSpec spec;
  spec.name = "linear(M=" + short_double(M) + ")";
  spec.f = [M](double x) { return M * x + 1.0; };
  spec.fprime = [M](double) { return M; };
  spec.domain = domain;
  return spec;
}

FunctionSpec make_quadratic_spec(Interval domain) {
  check_domain(domain);
  FunctionSpec spec;
  spec.name = "quadratic";
  spec.f = [](double x) { return x * x; };
  spec.fprime = [](double x) { return 2.0 * x; };
  spec.domain = domain;
  return spec;
}

FunctionSpec make_expression_spec(std::string_view text, Interval domain) {
  check_domain(domain);
  Expression expr = Expression::parse(text);
  FunctionSpec spec;
  spec.name = "expr:" + expr.pretty();
  spec.f = [expr](double x) { return expr.eval(x); };
  spec.fprime = [expr](double x) { return expr.eval_dual(x).tangent; };
  spec.domain = domain;

  const double width = domain.hi - domain.lo;
  for (double frac : {0.25, 0.5, 0.75}) {
    double t = domain.lo + frac * width;
    double v = 0.0;
    double d = 0.0;
    try {
      v = spec.f(t);
      d = spec.fprime(t);
    } catch (const EvalError& err) {
      throw std::domain_error(
          "expression is not evaluable at probe point x = " + short_double(t) +
          ": " + err.what());
    }
    if (!std::isfinite(v) || !std::isfinite(d))
      throw std::domain_error("expression is not finite at probe point x = " +
                              short_double(t));
  }
  return spec;
}

FunctionSpec parse_family(std::string_view descriptor, Interval domain) {
  std::size_t colon = descriptor.find(':');
  std::string_view name = descriptor.substr(0, colon);
  std::string_view rest =
      colon == std::string_view::npos ? std::string_view{}
                                      : descriptor.substr(colon + 1);
  std::string context = "family descriptor '" + std::string(descriptor) + "'";

  if (name == "expr") {
    if (colon == std::string_view::npos || rest.empty())
      throw std::invalid_argument("expected expr:<expression> in " + context);
    return make_expression_spec(rest, domain);
  }
  if (name == "quadratic") {
    if (colon != std::string_view::npos)
      throw std::invalid_argument("quadratic takes no parameters in " +
                                  context);
    return make_quadratic_spec(domain);
  }
  if (name == "linear") {
    auto params = parse_params(rest, context);
    double M = take_param(params, "M", context);
    reject_leftovers(params, context);
    return make_linear_spec(M, domain);
  }
  if (name == "expdecay") {
    auto params = parse_params(rest, context);
    double M = take_param(params, "M", context);
    double lambda = take_param(params, "lambda", context);
    reject_leftovers(params, context);
    return make_exp_decay_spec(M, lambda, domain);
  }
  throw std::invalid_argument("unknown function family '" + std::string(name) +
                              "'");
}

double sup_abs_derivative(const FunctionSpec& spec, Interval interval,
                          double q, int grid_n) {
  if (!(q >= 1.0)) throw std::domain_error("sup_abs_derivative requires q >= 1");
  if (grid_n < 2) throw std::domain_error("sup_abs_derivative requires grid_n >= 2");
  if (!(interval.lo <= interval.hi))
    throw std::domain_error("sup_abs_derivative requires lo <= hi");
  double sup = 0.0;
  for (int i = 0; i < grid_n; ++i) {
    double t = interval.lo + (interval.hi - interval.lo) *
                                 (static_cast<double>(i) / (grid_n - 1));
    double v = std::pow(std::fabs(spec.fprime(t)), q);
    if (v > sup) sup = v;
  }
  return sup;
}

}  // namespace frost
