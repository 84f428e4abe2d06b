#include "frost/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace frost {

namespace {

int resolve_threads(int requested) {
  int n = requested;
  if (n <= 0) {
    unsigned hc = std::thread::hardware_concurrency();
    n = hc == 0 ? 1 : static_cast<int>(hc);
  }
  if (const char* env = std::getenv("FRAC_OSTROWSKI_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0)
      n = static_cast<int>(std::min<long>(n, v));
  }
  return std::max(1, n);
}

struct CellDecoder {
  std::array<const std::vector<double>*, 9> axes;
  std::size_t cells_per_function = 0;

  explicit CellDecoder(const SweepSpec& spec)
      : axes{&spec.a, &spec.b, &spec.x, &spec.mu, &spec.alpha,
             &spec.m, &spec.M, &spec.p, &spec.q} {
    cells_per_function = 1;
    for (const auto* axis : axes) cells_per_function *= axis->size();
  }

  // index -> (function index, Scenario), q varying fastest.
  std::pair<std::size_t, Scenario> decode(std::size_t index) const {
    std::size_t fn = index / cells_per_function;
    std::size_t rem = index % cells_per_function;
    std::array<std::size_t, 9> pick{};
    for (int axis = 8; axis >= 0; --axis) {
      std::size_t size = axes[axis]->size();
      pick[axis] = rem % size;
      rem /= size;
    }
    Scenario s;
    s.a = (*axes[0])[pick[0]];
    s.b = (*axes[1])[pick[1]];
    s.x = (*axes[2])[pick[2]];
    s.mu = (*axes[3])[pick[3]];
    s.alpha = (*axes[4])[pick[4]];
    s.m = (*axes[5])[pick[5]];
    s.M = (*axes[6])[pick[6]];
    s.p = (*axes[7])[pick[7]];
    s.q = (*axes[8])[pick[8]];
    return {fn, s};
  }
};

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  SweepResult result;
  result.spec = spec;

  std::vector<FunctionSpec> functions;
  functions.reserve(spec.functions.size());
  for (const std::string& descriptor : spec.functions)
    functions.push_back(parse_family(descriptor));

  CellDecoder decoder(spec);
  const std::size_t total = functions.size() * decoder.cells_per_function;
  result.cells.resize(total);
  if (total == 0) return result;

  auto compute_cell = [&](std::size_t index) {
    auto [fn, scenario] = decoder.decode(index);
    SweepCell cell;
    cell.index = index;
    cell.function = spec.functions[fn];
    try {
      cell.report = verify(spec.theorem_id, functions[fn], scenario,
                           spec.verify);
    } catch (const std::exception& ex) {
      cell.error = ex.what();
      cell.report.theorem_id = spec.theorem_id;
      cell.report.function_name = functions[fn].name;
      cell.report.scenario = scenario;
    }
    return cell;
  };

  const int threads = resolve_threads(spec.threads);
  if (threads <= 1 || total <= 1) {
    for (std::size_t i = 0; i < total; ++i) result.cells[i] = compute_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= total) return;
        result.cells[i] = compute_cell(i);
      }
    };
    std::vector<std::thread> pool;
    int spawn = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(threads), total));
    pool.reserve(spawn);
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SweepSummary& sum = result.summary;
  sum.total = static_cast<long>(total);
  for (const SweepCell& cell : result.cells) {
    if (!cell.error.empty()) {
      ++sum.errors;
      continue;
    }
    if (cell.report.holds)
      ++sum.holds;
    else
      ++sum.fails;
    if (!cell.report.hypothesis_ok) ++sum.hypothesis_violations;
    if (!cell.report.quadrature_flags.empty()) ++sum.accuracy_flagged;
  }
  return result;
}

SharpnessResult sharpness_search(TheoremId id, const FunctionSpec& f,
                                 const Scenario& scenario_template,
                                 const SharpnessStrategy& strategy,
                                 const VerifyConfig& cfg) {
  SharpnessResult result;
  result.theorem_id = id;
  result.function_name = f.name;
  result.scenario_template = scenario_template;

  const double a = scenario_template.a;
  const double b = scenario_template.b;
  const double eps = 1e-6 * (b - a);
  const double lo = a + eps;
  const double hi = b - eps;

  auto ratio_at = [&](double x) {
    Scenario s = scenario_template;
    s.x = x;
    BoundSides sides = evaluate_sides(id, f, s, cfg);
    ++result.evaluations;
    if (!(sides.rhs > 0.0)) {
      result.degenerate = true;
      return -1.0;
    }
    return sides.lhs / sides.rhs;
  };

  const int coarse_n =
      strategy.kind == SharpnessStrategy::Kind::grid ? strategy.grid_n : 33;
  if (coarse_n < 2) throw std::domain_error("sharpness grid needs >= 2 points");

  double best_x = lo;
  double best_ratio = -1.0;
  for (int i = 0; i < coarse_n; ++i) {
    double x = lo + (hi - lo) * (static_cast<double>(i) / (coarse_n - 1));
    double r = ratio_at(x);
    if (r > best_ratio) {
      best_ratio = r;
      best_x = x;
    }
  }
  result.coarse_x = best_x;
  result.coarse_ratio = best_ratio < 0.0 ? 0.0 : best_ratio;

  if (strategy.kind == SharpnessStrategy::Kind::grid) {
    result.x_star = result.coarse_x;
    result.ratio = result.coarse_ratio;
    return result;
  }

  // Golden-section around the coarse winner; ties shrink toward smaller x.
  const double spacing = (hi - lo) / (coarse_n - 1);
  double left = std::max(lo, best_x - spacing);
  double right = std::min(hi, best_x + spacing);
  const double tol_abs = std::max(strategy.tol * (b - a), 1e-15 * (b - a));
  constexpr double kInvPhi = 0.6180339887498949;

  double c = right - kInvPhi * (right - left);
  double d = left + kInvPhi * (right - left);
  double fc = ratio_at(c);
  double fd = ratio_at(d);
  for (int it = 0; it < 200 && right - left > tol_abs; ++it) {
    if (fc >= fd) {
      right = d;
      d = c;
      fd = fc;
      c = right - kInvPhi * (right - left);
      fc = ratio_at(c);
    } else {
      left = c;
      c = d;
      fc = fd;
      d = left + kInvPhi * (right - left);
      fd = ratio_at(d);
    }
  }
  double refined_x = fc >= fd ? c : d;
  double refined_ratio = std::max(fc, fd);
  if (refined_ratio >= result.coarse_ratio) {
    result.x_star = refined_x;
    result.ratio = refined_ratio;
  } else {
    result.x_star = result.coarse_x;
    result.ratio = result.coarse_ratio;
  }
  return result;
}

std::vector<Finding> discrepancy_findings() {
  std::vector<Finding> findings;

  {
    FunctionSpec quadratic = make_quadratic_spec();
    Scenario s;  // a=0, b=1, x=1/2, mu=1
    double lhs = lemma1_lhs(quadratic, s);
    double rhs_minus =
        lemma1_rhs(quadratic, s, SignConvention::corrected_minus);
    double rhs_plus = lemma1_rhs(quadratic, s, SignConvention::paper_plus);

    Finding f;
    f.name = "derivative_identity_sign";
    f.statement =
        "The identity equating the weighted-endpoint deviation to the two "
        "t^mu-weighted derivative integrals requires the second term to be "
        "subtracted. For f(t) = t^2 on [0, 1] with x = 1/2 and mu = 1 the "
        "deviation is -1/12; combining the terms with a minus reproduces it, "
        "while the plus combination yields +1/4. The absolute-value bounds "
        "are unaffected because they sum the terms' magnitudes.";
    f.values = {
        {"weighted_endpoint_deviation", lhs},
        {"derivative_side_minus", rhs_minus},
        {"derivative_side_plus", rhs_plus},
        {"residual_minus", std::fabs(lhs - rhs_minus)},
        {"residual_plus", std::fabs(lhs - rhs_plus)},
    };
    findings.push_back(std::move(f));
  }

  {
    Scenario s;  // a=0, b=1, x=1/2, mu=1
    s.M = 0.5;
    s.p = 1.0;
    s.q = 2.0;
    double exact = rhs_corollary4(s);
    double holder = std::pow((s.q - 1.0) / (s.mu * (s.q - s.p) + s.q - 1.0),
                             (s.q - 1.0) / s.q);
    double xa = s.x - s.a, bx = s.b - s.x;
    double printed = holder * std::pow(1.0 / (s.mu * s.p + 1.0), 1.0 / s.q) *
                     (xa * xa + bx * bx) / (s.b - s.a);

    Finding f;
    f.name = "qnorm_printed_factor";
    f.statement =
        "At alpha = m = 1 the q-norm bound's scale constant is "
        "(M/(mu p + 1))^(1/q). The printed specialization drops the M "
        "factor, states the relation with '=' instead of '<=', and freezes "
        "the geometric exponent at 2; it therefore overstates the bound by "
        "(1/M)^(1/q) (sqrt(2) at M = 0.5, q = 2, mu = p = 1). The evaluator "
        "uses the exact factor; the printed form is reproduced only here.";
    f.values = {
        {"exact_rhs", exact},
        {"printed_rhs", printed},
        {"printed_over_exact", printed / exact},
        {"M", s.M},
        {"q", s.q},
    };
    findings.push_back(std::move(f));
  }

  return findings;
}

}  // namespace frost
