#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>
#include <stdexcept>

#include "doctest.h"
#include "frost/report.hpp"
#include "json.hpp"
#include "test_util.hpp"

using frost::ReportFormat;
using frost::ReportOptions;
using frost::SignConvention;

namespace {

frost::BoundReport sample_report() {
  auto f = frost::make_exp_decay_spec(0.8, 1.0);
  frost::Scenario s;
  s.x = 0.3;
  return frost::verify(frost::TheoremId::corollary3, f, s);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  ++counter;
  std::string out_path =
      "/tmp/frost_cli_out_" + std::to_string(counter) + ".txt";
  std::string err_path =
      "/tmp/frost_cli_err_" + std::to_string(counter) + ".txt";
  std::string cmd = std::string("\"") + FROST_CLI_PATH + "\" " + args + " > " +
                    out_path + " 2> " + err_path;
  int rc = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  REQUIRE(out.good());
}

const std::string kSweepConfig =
    "# three x, three mu, two alpha: 18 cells\n"
    "theorem = t1\n"
    "function = expdecay:M=0.8,lambda=1\n"
    "x = 0.25\nx = 0.5\nx = 0.75\n"
    "mu = 0.5\nmu = 1\nmu = 2\n"
    "alpha = 0.5\nalpha = 1\n"
    "m = 0.5\n"
    "M = 0.8\n"
    "threads = 1\n";

}  // namespace

TEST_CASE("format and sign names parse both ways") {
  CHECK(frost::parse_report_format("json") == ReportFormat::json);
  CHECK(frost::parse_report_format("csv") == ReportFormat::csv);
  CHECK(frost::parse_report_format("text") == ReportFormat::text);
  CHECK(frost::to_string(ReportFormat::csv) == "csv");
  CHECK_THROWS_AS(frost::parse_report_format("xml"), std::domain_error);
  CHECK(frost::parse_sign_convention("paper") == SignConvention::paper_plus);
  CHECK(frost::parse_sign_convention("corrected") ==
        SignConvention::corrected_minus);
  CHECK(frost::to_string(SignConvention::paper_plus) == "paper");
  CHECK_THROWS_AS(frost::parse_sign_convention("plus"), std::domain_error);
}

TEST_CASE("verify report round-trips through json") {
  auto report = sample_report();
  ReportOptions opts;
  opts.format = ReportFormat::json;
  opts.deterministic = true;
  auto doc = nlohmann::json::parse(frost::render_verify_report(report, opts));
  CHECK(doc["tool"] == "frost");
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["kind"] == "verify");
  CHECK_FALSE(doc.contains("generated_at"));
  const auto& rep = doc["report"];
  CHECK(rep["theorem"] == "c3");
  CHECK(rep["scenario"]["x"] == 0.3);
  CHECK(rep["lhs"].get<double>() == report.lhs);
  CHECK(rep["rhs"].get<double>() == report.rhs);
  CHECK(rep["holds"] == report.holds);
  CHECK(rep["hypothesis_audit"].is_array());
  bool saw_bound = false;
  for (const auto& entry : rep["hypothesis_audit"])
    if (entry["name"] == "derivative_bound") saw_bound = entry["passed"];
  CHECK(saw_bound);

  opts.deterministic = false;
  auto stamped =
      nlohmann::json::parse(frost::render_verify_report(report, opts));
  CHECK(stamped.contains("generated_at"));
}

TEST_CASE("text report states the verdict") {
  auto report = sample_report();
  ReportOptions opts;
  opts.deterministic = true;
  std::string text = frost::render_verify_report(report, opts);
  CHECK(text.find("holds: yes") != std::string::npos);
  CHECK(text.find("theorem: c3") != std::string::npos);
  CHECK(text.find("[pass]") != std::string::npos);
}

TEST_CASE("sweep csv layout and quoting") {
  frost::SweepSpec spec;
  spec.functions = {"expdecay:M=0.8,lambda=1"};
  spec.x = {0.25, 0.5, 2.0};  // last cell errors
  spec.threads = 1;
  auto result = frost::run_sweep(spec);
  ReportOptions opts;
  opts.format = ReportFormat::csv;
  opts.deterministic = true;
  auto lines = split_lines(frost::render_sweep_report(result, opts));
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "# frost 0.1.0 sweep schema=1");
  CHECK(lines[1] ==
        "index,function,theorem,a,b,x,mu,alpha,m,M,p,q,lhs,rhs,margin,holds,"
        "identity_residual,hypothesis_ok,accuracy_ok,error");
  CHECK(lines[2].rfind("0,\"expdecay:M=0.8,lambda=1\",t1,", 0) == 0);
  CHECK(lines[4].find(",,,,,,,") != std::string::npos);  // error cell blanks
  CHECK(lines[5].rfind("# summary total=3 holds=2 fails=0", 0) == 0);
  CHECK(lines[5].find("errors=1") != std::string::npos);
}

TEST_CASE("sweep json carries input echo, cells, and summary") {
  frost::SweepSpec spec;
  spec.theorem_id = frost::TheoremId::corollary3;
  spec.functions = {"linear:M=1"};
  spec.x = {0.25, 0.75};
  spec.threads = 1;
  spec.seed = 17;
  auto result = frost::run_sweep(spec);
  ReportOptions opts;
  opts.format = ReportFormat::json;
  opts.deterministic = true;
  auto doc = nlohmann::json::parse(frost::render_sweep_report(result, opts));
  CHECK(doc["kind"] == "sweep");
  CHECK(doc["input"]["theorem"] == "c3");
  CHECK(doc["input"]["seed"] == 17);
  CHECK(doc["input"]["grids"]["x"] == nlohmann::json::array({0.25, 0.75}));
  REQUIRE(doc["cells"].size() == 2);
  CHECK(doc["cells"][0]["report"]["scenario"]["x"] == 0.25);
  CHECK(doc["summary"]["total"] == 2);
  CHECK(doc["summary"]["holds"] == 2);
}

TEST_CASE("sharpness and findings render under every format") {
  auto f = frost::make_quadratic_spec();
  frost::Scenario tpl;
  auto res = frost::sharpness_search(frost::TheoremId::corollary3, f, tpl);
  auto findings = frost::discrepancy_findings();
  for (auto format : {ReportFormat::json, ReportFormat::csv,
                      ReportFormat::text}) {
    ReportOptions opts;
    opts.format = format;
    opts.deterministic = true;
    CHECK_FALSE(frost::render_sharpness_report(res, opts).empty());
    CHECK_FALSE(frost::render_findings_report(findings, opts).empty());
  }
  ReportOptions opts;
  opts.format = ReportFormat::json;
  opts.deterministic = true;
  auto doc =
      nlohmann::json::parse(frost::render_sharpness_report(res, opts));
  CHECK(doc["kind"] == "sharpness");
  CHECK(doc["result"]["ratio"].get<double>() == res.ratio);
  auto fdoc =
      nlohmann::json::parse(frost::render_findings_report(findings, opts));
  REQUIRE(fdoc["findings"].size() == 2);
  CHECK(fdoc["findings"][0]["name"] == "derivative_identity_sign");
}

TEST_CASE("cli verify examples") {
  auto ok = run_cli(
      "verify --theorem c3 --family expdecay:M=0.8,lambda=1 --x 0.3");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("holds: yes") != std::string::npos);

  auto gated = run_cli(
      "verify --theorem t1 --family expdecay:M=0.8,lambda=1 --M 1.5");
  CHECK(gated.exit_code == 2);
  CHECK(gated.err.find("M must lie in (0, 1]") != std::string::npos);

  auto classical = run_cli(
      "verify --theorem classical --f x^2 --M 2 --format json "
      "--deterministic");
  CHECK(classical.exit_code == 0);
  auto doc = nlohmann::json::parse(classical.out);
  CHECK(doc["report"]["lhs"].get<double>() ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-10));
  CHECK(doc["report"]["rhs"].get<double>() == 0.5);
}

TEST_CASE("cli rejects bad input with exit 2") {
  CHECK(run_cli("verify --theorem t9 --f x^2").exit_code == 2);
  auto expr = run_cli("verify --theorem t1 --f \"exp(\"");
  CHECK(expr.exit_code == 2);
  CHECK(expr.err.find("position") != std::string::npos);
  CHECK(run_cli("verify --f x^2").exit_code == 2);            // theorem missing
  CHECK(run_cli("verify --theorem t1").exit_code == 2);       // function missing
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("sweep /nonexistent.cfg").exit_code == 2);
}

TEST_CASE("cli verify exit 1 on a failing verdict") {
  // paper sign convention breaks the identity but not the bound; force a
  // failure by shrinking the right side with a huge verdict tolerance bar:
  // classical bound at M far below the true derivative bound fails
  auto r = run_cli("verify --theorem classical --f x^2 --M 0.01 --x 0.9");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("holds: NO") != std::string::npos);
}

TEST_CASE("cli sweep runs a config file") {
  write_file("/tmp/frost_sweep_basic.cfg", kSweepConfig);
  auto csv = run_cli(
      "sweep /tmp/frost_sweep_basic.cfg --format csv --deterministic");
  CHECK(csv.exit_code == 0);
  auto lines = split_lines(csv.out);
  REQUIRE(lines.size() == 21);  // header + columns + 18 cells + summary
  CHECK(lines[0] == "# frost 0.1.0 sweep schema=1");
  CHECK(lines[20].rfind("# summary total=18 holds=18", 0) == 0);

  auto again = run_cli(
      "sweep /tmp/frost_sweep_basic.cfg --format csv --deterministic");
  CHECK(again.out == csv.out);

  auto json_run = run_cli(
      "sweep /tmp/frost_sweep_basic.cfg --format json --deterministic "
      "--threads 2");
  auto doc = nlohmann::json::parse(json_run.out);
  CHECK(doc["summary"]["total"] == 18);
  CHECK(doc["summary"]["hypothesis_violations"] == 9);
}

TEST_CASE("cli sweep strict mode and config validation") {
  write_file("/tmp/frost_sweep_err.cfg",
             "theorem = t1\nfunction = linear:M=0.8\nx = 0.5\nx = 9\n");
  CHECK(run_cli("sweep /tmp/frost_sweep_err.cfg").exit_code == 0);
  CHECK(run_cli("sweep /tmp/frost_sweep_err.cfg --strict").exit_code == 1);

  write_file("/tmp/frost_sweep_bad.cfg", "theorem = t1\nwidth = 3\n");
  auto bad = run_cli("sweep /tmp/frost_sweep_bad.cfg");
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("unknown key") != std::string::npos);
}

TEST_CASE("cli sharpness and findings") {
  auto flat = run_cli(
      "sharpness --theorem c5 --f 3 --M 0.5 --format json --deterministic");
  CHECK(flat.exit_code == 0);
  auto doc = nlohmann::json::parse(flat.out);
  CHECK(doc["result"]["ratio"].get<double>() <= 1e-12);

  auto findings = run_cli("findings --format json --deterministic");
  CHECK(findings.exit_code == 0);
  auto fdoc = nlohmann::json::parse(findings.out);
  CHECK(fdoc["findings"].size() == 2);
  auto empty = run_cli("findings --no-findings --format json --deterministic");
  CHECK(nlohmann::json::parse(empty.out)["findings"].empty());
}

TEST_CASE("cli accuracy exit code and --out") {
  auto starved = run_cli(
      "verify --theorem t1 --family expdecay:M=0.8,lambda=1 --mu 0.5 "
      "--rel-tol 1e-15 --abs-tol 1e-300 --max-depth 2");
  CHECK(starved.exit_code == 3);
  CHECK(starved.out.find("quadrature_flags") != std::string::npos);

  auto filed = run_cli(
      "verify --theorem c3 --family expdecay:M=0.8,lambda=1 --x 0.3 "
      "--format json --deterministic --out /tmp/frost_out_report.json");
  CHECK(filed.exit_code == 0);
  auto doc = nlohmann::json::parse(slurp("/tmp/frost_out_report.json"));
  CHECK(doc["kind"] == "verify");
}

TEST_CASE("cli version flag prints the tool version") {
  auto v = run_cli("--version");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("0.1.0") != std::string::npos);
}
