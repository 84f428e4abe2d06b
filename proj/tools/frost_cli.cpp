// frost: verifies Ostrowski-type bounds for Riemann-Liouville fractional
// integrals over function families and parameter sweeps.
//
// Exit codes: 0 bound holds, 1 bound fails, 2 usage or domain error,
// 3 quadrature accuracy failure. Usage/domain errors dominate accuracy,
// accuracy dominates the verdict.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frost/bounds.hpp"
#include "frost/exprlang.hpp"
#include "frost/funclib.hpp"
#include "frost/harness.hpp"
#include "frost/report.hpp"
#include "frost/version.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAccuracy = 3;

struct OutputOptions {
  std::string format = "text";
  std::string out;  // empty = stdout
  bool deterministic = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Report format: json, csv, or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", out.out, "Write the report to this file");
  cmd->add_flag("--deterministic", out.deterministic,
                "Omit timestamps so repeated runs are byte-identical");
}

int emit(const std::string& document, const OutputOptions& out) {
  if (out.out.empty()) {
    std::cout << document;
    return 0;
  }
  std::ofstream file(out.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output file '" << out.out << "'\n";
    return kExitUsage;
  }
  file << document;
  return file ? 0 : kExitUsage;
}

struct ScenarioFlags {
  frost::Scenario s;
  std::string expr;
  std::string family;
};

void add_scenario_flags(CLI::App* cmd, ScenarioFlags& sf, bool with_x) {
  auto* f = cmd->add_option("--f", sf.expr,
                            "Function as an expression in x, e.g. \"x^2\"");
  auto* fam = cmd->add_option(
      "--family", sf.family,
      "Builtin family descriptor, e.g. expdecay:M=0.8,lambda=1");
  f->excludes(fam);
  fam->excludes(f);
  cmd->add_option("--a", sf.s.a, "Left endpoint")->capture_default_str();
  cmd->add_option("--b", sf.s.b, "Right endpoint")->capture_default_str();
  if (with_x)
    cmd->add_option("--x", sf.s.x, "Evaluation point in [a, b]")
        ->capture_default_str();
  cmd->add_option("--mu", sf.s.mu, "Fractional order mu > 0")
      ->capture_default_str();
  cmd->add_option("--alpha", sf.s.alpha, "Convexity shape alpha in (0, 1]")
      ->capture_default_str();
  cmd->add_option("--m", sf.s.m, "Convexity shape m in (0, 1]")
      ->capture_default_str();
  cmd->add_option("--M", sf.s.M, "Derivative bound M")->capture_default_str();
  cmd->add_option("--p", sf.s.p, "Weight exponent p")->capture_default_str();
  cmd->add_option("--q", sf.s.q, "Norm exponent q")->capture_default_str();
}

struct VerifyFlags {
  double verdict_tol = 1e-8;
  std::string sign = "corrected";
  bool exact_integral = false;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_depth = 50;
};

void add_verify_flags(CLI::App* cmd, VerifyFlags& vf) {
  cmd->add_option("--tol", vf.verdict_tol,
                  "Absolute slack when judging margin >= 0")
      ->capture_default_str();
  cmd->add_option("--sign", vf.sign,
                  "Derivative-identity sign convention: corrected or paper")
      ->check(CLI::IsMember({"corrected", "paper"}))
      ->capture_default_str();
  cmd->add_flag("--exact-integral", vf.exact_integral,
                "Replace the closed-form constants by quadrature of their "
                "defining integrals (extends the bounds to M > 1)");
  cmd->add_option("--rel-tol", vf.rel_tol, "Quadrature relative tolerance")
      ->capture_default_str();
  cmd->add_option("--abs-tol", vf.abs_tol, "Quadrature absolute tolerance")
      ->capture_default_str();
  cmd->add_option("--max-depth", vf.max_depth,
                  "Quadrature refinement depth limit")
      ->capture_default_str();
}

frost::VerifyConfig make_verify_config(const VerifyFlags& vf) {
  frost::VerifyConfig cfg;
  cfg.verdict_tol = vf.verdict_tol;
  cfg.sign = frost::parse_sign_convention(vf.sign);
  cfg.exact_integral = vf.exact_integral;
  cfg.quad.rel_tol = vf.rel_tol;
  cfg.quad.abs_tol = vf.abs_tol;
  cfg.quad.max_depth = vf.max_depth;
  return cfg;
}

frost::FunctionSpec resolve_function(const ScenarioFlags& sf) {
  frost::Interval domain{0.0, std::max(4.0, sf.s.b)};
  if (!sf.expr.empty()) return frost::make_expression_spec(sf.expr, domain);
  if (!sf.family.empty()) return frost::parse_family(sf.family, domain);
  throw std::domain_error("a function is required: pass --f or --family");
}

// ---------------------------------------------------------------------------
// sweep config file: flat key = value lines, '#' comments, repeated keys
// extend grid lists. Documented in docs/report-formats.md.

double parse_double_value(const std::string& key, const std::string& text) {
  double v = 0.0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::domain_error("config key '" + key + "': bad number '" + text +
                            "'");
  return v;
}

long parse_long_value(const std::string& key, const std::string& text) {
  long v = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::domain_error("config key '" + key + "': bad integer '" + text +
                            "'");
  return v;
}

bool parse_bool_value(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw std::domain_error("config key '" + key + "': bad boolean '" + text +
                          "' (use true/false)");
}

std::string trim(const std::string& s) {
  std::size_t lo = s.find_first_not_of(" \t\r");
  if (lo == std::string::npos) return {};
  std::size_t hi = s.find_last_not_of(" \t\r");
  return s.substr(lo, hi - lo + 1);
}

frost::SweepSpec load_sweep_config(const std::string& path) {
  std::ifstream file(path);
  if (!file)
    throw std::domain_error("cannot read config file '" + path + "'");

  frost::SweepSpec spec;
  // Grid keys replace the built-in singleton default on first mention and
  // extend on repetition.
  struct GridSlot {
    std::vector<double>* values;
    bool touched = false;
  };
  std::map<std::string, GridSlot> grids{
      {"a", {&spec.a}},   {"b", {&spec.b}},         {"x", {&spec.x}},
      {"mu", {&spec.mu}}, {"alpha", {&spec.alpha}}, {"m", {&spec.m}},
      {"M", {&spec.M}},   {"p", {&spec.p}},         {"q", {&spec.q}},
  };

  std::string line;
  int lineno = 0;
  while (std::getline(file, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::domain_error("config line " + std::to_string(lineno) +
                              ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::domain_error("config line " + std::to_string(lineno) +
                              ": empty key or value");

    if (auto it = grids.find(key); it != grids.end()) {
      if (!it->second.touched) {
        it->second.values->clear();
        it->second.touched = true;
      }
      it->second.values->push_back(parse_double_value(key, value));
    } else if (key == "theorem") {
      spec.theorem_id = frost::parse_theorem_id(value);
    } else if (key == "function") {
      spec.functions.push_back(value);
    } else if (key == "sign") {
      spec.verify.sign = frost::parse_sign_convention(value);
    } else if (key == "verdict_tol") {
      spec.verify.verdict_tol = parse_double_value(key, value);
    } else if (key == "audit_tol") {
      spec.verify.audit_tol = parse_double_value(key, value);
    } else if (key == "rel_tol") {
      spec.verify.quad.rel_tol = parse_double_value(key, value);
    } else if (key == "abs_tol") {
      spec.verify.quad.abs_tol = parse_double_value(key, value);
    } else if (key == "max_depth") {
      spec.verify.quad.max_depth =
          static_cast<int>(parse_long_value(key, value));
    } else if (key == "exact_integral") {
      spec.verify.exact_integral = parse_bool_value(key, value);
    } else if (key == "seed") {
      spec.seed = parse_long_value(key, value);
    } else if (key == "threads") {
      spec.threads = static_cast<int>(parse_long_value(key, value));
    } else {
      throw std::domain_error("config line " + std::to_string(lineno) +
                              ": unknown key '" + key + "'");
    }
  }
  return spec;
}

frost::ReportOptions make_report_options(const OutputOptions& out) {
  frost::ReportOptions opts;
  opts.format = frost::parse_report_format(out.format);
  opts.deterministic = out.deterministic;
  return opts;
}

int run_verify(const std::string& theorem, const ScenarioFlags& sf,
               const VerifyFlags& vf, const OutputOptions& out) {
  frost::TheoremId id = frost::parse_theorem_id(theorem);
  frost::FunctionSpec f = resolve_function(sf);
  frost::BoundReport report =
      frost::verify(id, f, sf.s, make_verify_config(vf));
  int rc = emit(frost::render_verify_report(report, make_report_options(out)),
                out);
  if (rc != 0) return rc;
  if (!report.quadrature_flags.empty()) return kExitAccuracy;
  return report.holds ? kExitHolds : kExitFails;
}

int run_sweep(const std::string& config_path, int threads_override,
              bool strict, const OutputOptions& out) {
  frost::SweepSpec spec = load_sweep_config(config_path);
  if (threads_override > 0) spec.threads = threads_override;
  frost::SweepResult result = frost::run_sweep(spec);
  int rc = emit(frost::render_sweep_report(result, make_report_options(out)),
                out);
  if (rc != 0) return rc;
  if (strict && (result.summary.fails > 0 || result.summary.errors > 0))
    return kExitFails;
  return kExitHolds;
}

int run_sharpness(const std::string& theorem, const ScenarioFlags& sf,
                  const VerifyFlags& vf, const std::string& strategy_name,
                  int grid_n, double xtol, const OutputOptions& out) {
  frost::TheoremId id = frost::parse_theorem_id(theorem);
  frost::FunctionSpec f = resolve_function(sf);
  frost::SharpnessStrategy strategy;
  strategy.kind = strategy_name == "grid"
                      ? frost::SharpnessStrategy::Kind::grid
                      : frost::SharpnessStrategy::Kind::golden;
  strategy.grid_n = grid_n;
  strategy.tol = xtol;
  frost::SharpnessResult result =
      frost::sharpness_search(id, f, sf.s, strategy, make_verify_config(vf));
  return emit(frost::render_sharpness_report(result, make_report_options(out)),
              out);
}

int run_findings(bool no_findings, const OutputOptions& out) {
  std::vector<frost::Finding> findings;
  if (!no_findings) findings = frost::discrepancy_findings();
  return emit(frost::render_findings_report(findings, make_report_options(out)),
              out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(frost::kToolName) +
               " - numerical verification of Ostrowski-type bounds for "
               "Riemann-Liouville fractional integrals"};
  app.set_version_flag("--version", frost::kToolVersion);
  app.require_subcommand(1);

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Check one bound on one scenario");
  std::string verify_theorem;
  verify_cmd
      ->add_option("--theorem", verify_theorem,
                   "One of: classical, t1, c1, c2, c3, t2, c4, c5, c6")
      ->required();
  ScenarioFlags verify_sf;
  VerifyFlags verify_vf;
  OutputOptions verify_out;
  add_scenario_flags(verify_cmd, verify_sf, /*with_x=*/true);
  add_verify_flags(verify_cmd, verify_vf);
  add_output_flags(verify_cmd, verify_out);

  // sweep
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Run a parameter sweep from a config file");
  std::string sweep_config;
  sweep_cmd->add_option("config", sweep_config, "Key = value config file")
      ->required();
  int sweep_threads = 0;
  sweep_cmd->add_option("--threads", sweep_threads,
                        "Worker thread cap (overrides the config)");
  bool sweep_strict = false;
  sweep_cmd->add_flag("--strict", sweep_strict,
                      "Exit nonzero when any cell fails or errors");
  OutputOptions sweep_out;
  add_output_flags(sweep_cmd, sweep_out);

  // sharpness
  auto* sharp_cmd = app.add_subcommand(
      "sharpness", "Maximize lhs/rhs over the evaluation point x");
  std::string sharp_theorem;
  sharp_cmd
      ->add_option("--theorem", sharp_theorem,
                   "One of: classical, t1, c1, c2, c3, t2, c4, c5, c6")
      ->required();
  ScenarioFlags sharp_sf;
  VerifyFlags sharp_vf;
  OutputOptions sharp_out;
  add_scenario_flags(sharp_cmd, sharp_sf, /*with_x=*/false);
  add_verify_flags(sharp_cmd, sharp_vf);
  std::string sharp_strategy = "golden";
  sharp_cmd
      ->add_option("--strategy", sharp_strategy,
                   "Search strategy: golden or grid")
      ->check(CLI::IsMember({"golden", "grid"}))
      ->capture_default_str();
  int sharp_grid_n = 65;
  sharp_cmd->add_option("--grid-n", sharp_grid_n, "Grid strategy sample count")
      ->capture_default_str();
  double sharp_xtol = 1e-6;
  sharp_cmd
      ->add_option("--xtol", sharp_xtol,
                   "Golden strategy x resolution relative to (b - a)")
      ->capture_default_str();
  add_output_flags(sharp_cmd, sharp_out);

  // findings
  auto* findings_cmd = app.add_subcommand(
      "findings", "Numeric demonstrations of the formula discrepancies");
  bool no_findings = false;
  findings_cmd->add_flag("--no-findings", no_findings,
                         "Emit an empty findings report");
  OutputOptions findings_out;
  add_output_flags(findings_cmd, findings_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify_cmd->parsed())
      return run_verify(verify_theorem, verify_sf, verify_vf, verify_out);
    if (sweep_cmd->parsed())
      return run_sweep(sweep_config, sweep_threads, sweep_strict, sweep_out);
    if (sharp_cmd->parsed())
      return run_sharpness(sharp_theorem, sharp_sf, sharp_vf, sharp_strategy,
                           sharp_grid_n, sharp_xtol, sharp_out);
    if (findings_cmd->parsed()) return run_findings(no_findings, findings_out);
  } catch (const frost::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
