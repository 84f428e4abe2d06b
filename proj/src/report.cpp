#include "frost/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>
#include <stdexcept>

#include "frost/numfmt.hpp"
#include "frost/version.hpp"
#include "json.hpp"

namespace frost {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string timestamp_utc() {
  std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string g12(double v) { return to_sig_digits(v, 12); }
std::string g17(double v) { return to_sig_digits(v, 17); }

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

ordered_json json_header(const char* kind, const ReportOptions& opts) {
  ordered_json doc;
  doc["tool"] = kToolName;
  doc["tool_version"] = kToolVersion;
  doc["schema_version"] = kReportSchemaVersion;
  doc["kind"] = kind;
  if (!opts.deterministic) doc["generated_at"] = timestamp_utc();
  return doc;
}

ordered_json scenario_json(const Scenario& s) {
  ordered_json j;
  j["a"] = s.a;
  j["b"] = s.b;
  j["x"] = s.x;
  j["mu"] = s.mu;
  j["alpha"] = s.alpha;
  j["m"] = s.m;
  j["M"] = s.M;
  j["p"] = s.p;
  j["q"] = s.q;
  return j;
}

ordered_json bound_report_json(const BoundReport& r) {
  ordered_json j;
  j["theorem"] = std::string(to_string(r.theorem_id));
  j["function"] = r.function_name;
  j["scenario"] = scenario_json(r.scenario);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["holds"] = r.holds;
  j["identity_residual"] = r.identity_residual;
  j["exact_integral"] = r.exact_integral;
  j["hypothesis_ok"] = r.hypothesis_ok;
  ordered_json audits = ordered_json::array();
  for (const AuditEntry& e : r.hypothesis_audit) {
    ordered_json a;
    a["name"] = e.name;
    a["passed"] = e.passed;
    a["measure"] = e.measure;
    a["detail"] = e.detail;
    audits.push_back(std::move(a));
  }
  j["hypothesis_audit"] = std::move(audits);
  j["quadrature_flags"] = r.quadrature_flags;
  return j;
}

ordered_json quad_json(const QuadratureConfig& q) {
  ordered_json j;
  j["rel_tol"] = q.rel_tol;
  j["abs_tol"] = q.abs_tol;
  j["max_depth"] = q.max_depth;
  j["points_per_panel"] = q.points_per_panel;
  return j;
}

ordered_json sweep_input_json(const SweepSpec& spec) {
  ordered_json j;
  j["theorem"] = std::string(to_string(spec.theorem_id));
  j["functions"] = spec.functions;
  ordered_json grids;
  grids["a"] = spec.a;
  grids["b"] = spec.b;
  grids["x"] = spec.x;
  grids["mu"] = spec.mu;
  grids["alpha"] = spec.alpha;
  grids["m"] = spec.m;
  grids["M"] = spec.M;
  grids["p"] = spec.p;
  grids["q"] = spec.q;
  j["grids"] = std::move(grids);
  j["quadrature"] = quad_json(spec.verify.quad);
  j["verdict_tol"] = spec.verify.verdict_tol;
  j["audit_tol"] = spec.verify.audit_tol;
  j["sign"] = std::string(to_string(spec.verify.sign));
  j["exact_integral"] = spec.verify.exact_integral;
  j["seed"] = spec.seed;
  j["threads"] = spec.threads;
  return j;
}

ordered_json summary_json(const SweepSummary& s) {
  ordered_json j;
  j["total"] = s.total;
  j["holds"] = s.holds;
  j["fails"] = s.fails;
  j["hypothesis_violations"] = s.hypothesis_violations;
  j["accuracy_flagged"] = s.accuracy_flagged;
  j["errors"] = s.errors;
  return j;
}

void text_header(std::ostringstream& out, const char* kind,
                 const ReportOptions& opts) {
  out << kToolName << ' ' << kToolVersion << " " << kind << " report (schema "
      << kReportSchemaVersion << ")\n";
  if (!opts.deterministic) out << "generated_at: " << timestamp_utc() << '\n';
}

void csv_header(std::ostringstream& out, const char* kind,
                const ReportOptions& opts) {
  out << "# " << kToolName << ' ' << kToolVersion << " " << kind
      << " schema=" << kReportSchemaVersion;
  if (!opts.deterministic) out << " generated_at=" << timestamp_utc();
  out << '\n';
}

void text_scenario(std::ostringstream& out, const Scenario& s) {
  out << "scenario: a=" << g12(s.a) << " b=" << g12(s.b) << " x=" << g12(s.x)
      << " mu=" << g12(s.mu) << " alpha=" << g12(s.alpha) << " m=" << g12(s.m)
      << " M=" << g12(s.M) << " p=" << g12(s.p) << " q=" << g12(s.q) << '\n';
}

void text_bound_report(std::ostringstream& out, const BoundReport& r) {
  out << "theorem: " << to_string(r.theorem_id) << '\n';
  out << "function: " << r.function_name << '\n';
  text_scenario(out, r.scenario);
  out << "lhs    = " << g12(r.lhs) << '\n';
  out << "rhs    = " << g12(r.rhs) << '\n';
  out << "margin = " << g12(r.margin) << '\n';
  out << "holds: " << (r.holds ? "yes" : "NO") << '\n';
  out << "identity_residual = " << g12(r.identity_residual) << '\n';
  if (r.exact_integral) out << "exact_integral_mode: yes\n";
  out << "hypothesis_audit:" << (r.hypothesis_audit.empty() ? " (none)" : "")
      << '\n';
  for (const AuditEntry& e : r.hypothesis_audit)
    out << "  [" << (e.passed ? "pass" : "FAIL") << "] " << e.name << ": "
        << e.detail << '\n';
  out << "quadrature_flags:";
  if (r.quadrature_flags.empty()) {
    out << " (none)\n";
  } else {
    for (const std::string& f : r.quadrature_flags) out << ' ' << f;
    out << '\n';
  }
}

const char* kCellColumns =
    "index,function,theorem,a,b,x,mu,alpha,m,M,p,q,lhs,rhs,margin,holds,"
    "identity_residual,hypothesis_ok,accuracy_ok,error";

void csv_cell_row(std::ostringstream& out, std::size_t index,
                  const std::string& function, const BoundReport& r,
                  const std::string& error) {
  const Scenario& s = r.scenario;
  out << index << ',' << csv_escape(function) << ',' << to_string(r.theorem_id)
      << ',' << g17(s.a) << ',' << g17(s.b) << ',' << g17(s.x) << ','
      << g17(s.mu) << ',' << g17(s.alpha) << ',' << g17(s.m) << ','
      << g17(s.M) << ',' << g17(s.p) << ',' << g17(s.q) << ',';
  if (error.empty()) {
    out << g17(r.lhs) << ',' << g17(r.rhs) << ',' << g17(r.margin) << ','
        << (r.holds ? 1 : 0) << ',' << g17(r.identity_residual) << ','
        << (r.hypothesis_ok ? 1 : 0) << ','
        << (r.quadrature_flags.empty() ? 1 : 0) << ',';
  } else {
    out << ",,,,,,,";
  }
  out << csv_escape(error) << '\n';
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw std::domain_error("unknown report format '" + std::string(name) +
                          "'; expected json, csv, or text");
}

std::string_view to_string(ReportFormat format) {
  switch (format) {
    case ReportFormat::json: return "json";
    case ReportFormat::csv: return "csv";
    case ReportFormat::text: return "text";
  }
  return "unknown";
}

std::string_view to_string(SignConvention sign) {
  return sign == SignConvention::paper_plus ? "paper" : "corrected";
}

SignConvention parse_sign_convention(std::string_view name) {
  if (name == "paper") return SignConvention::paper_plus;
  if (name == "corrected") return SignConvention::corrected_minus;
  throw std::domain_error("unknown sign convention '" + std::string(name) +
                          "'; expected paper or corrected");
}

std::string render_verify_report(const BoundReport& report,
                                 const ReportOptions& opts) {
  switch (opts.format) {
    case ReportFormat::json: {
      ordered_json doc = json_header("verify", opts);
      doc["report"] = bound_report_json(report);
      return doc.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::ostringstream out;
      csv_header(out, "verify", opts);
      out << kCellColumns << '\n';
      csv_cell_row(out, 0, report.function_name, report, "");
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      text_header(out, "verify", opts);
      text_bound_report(out, report);
      return out.str();
    }
  }
  return {};
}

std::string render_sweep_report(const SweepResult& result,
                                const ReportOptions& opts) {
  switch (opts.format) {
    case ReportFormat::json: {
      ordered_json doc = json_header("sweep", opts);
      doc["input"] = sweep_input_json(result.spec);
      ordered_json cells = ordered_json::array();
      for (const SweepCell& cell : result.cells) {
        ordered_json c;
        c["index"] = cell.index;
        c["function"] = cell.function;
        if (cell.error.empty()) {
          c["report"] = bound_report_json(cell.report);
        } else {
          c["scenario"] = scenario_json(cell.report.scenario);
          c["error"] = cell.error;
        }
        cells.push_back(std::move(c));
      }
      doc["cells"] = std::move(cells);
      doc["summary"] = summary_json(result.summary);
      return doc.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::ostringstream out;
      csv_header(out, "sweep", opts);
      out << kCellColumns << '\n';
      for (const SweepCell& cell : result.cells)
        csv_cell_row(out, cell.index, cell.function, cell.report, cell.error);
      const SweepSummary& s = result.summary;
      out << "# summary total=" << s.total << " holds=" << s.holds
          << " fails=" << s.fails
          << " hypothesis_violations=" << s.hypothesis_violations
          << " accuracy_flagged=" << s.accuracy_flagged
          << " errors=" << s.errors << '\n';
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      text_header(out, "sweep", opts);
      out << "theorem: " << to_string(result.spec.theorem_id) << '\n';
      out << "cells: " << result.cells.size() << '\n';
      for (const SweepCell& cell : result.cells) {
        const Scenario& s = cell.report.scenario;
        out << "  [" << cell.index << "] " << cell.function << " a="
            << g12(s.a) << " b=" << g12(s.b) << " x=" << g12(s.x)
            << " mu=" << g12(s.mu) << " alpha=" << g12(s.alpha)
            << " m=" << g12(s.m) << " M=" << g12(s.M) << " p=" << g12(s.p)
            << " q=" << g12(s.q) << " -> ";
        if (!cell.error.empty()) {
          out << "error: " << cell.error << '\n';
          continue;
        }
        const BoundReport& r = cell.report;
        out << "lhs=" << g12(r.lhs) << " rhs=" << g12(r.rhs)
            << " margin=" << g12(r.margin) << (r.holds ? " holds" : " FAILS")
            << (r.hypothesis_ok ? "" : " hypothesis-violated")
            << (r.quadrature_flags.empty() ? "" : " accuracy-flagged") << '\n';
      }
      const SweepSummary& s = result.summary;
      out << "summary: total=" << s.total << " holds=" << s.holds
          << " fails=" << s.fails
          << " hypothesis_violations=" << s.hypothesis_violations
          << " accuracy_flagged=" << s.accuracy_flagged
          << " errors=" << s.errors << '\n';
      return out.str();
    }
  }
  return {};
}

std::string render_sharpness_report(const SharpnessResult& result,
                                    const ReportOptions& opts) {
  switch (opts.format) {
    case ReportFormat::json: {
      ordered_json doc = json_header("sharpness", opts);
      ordered_json j;
      j["theorem"] = std::string(to_string(result.theorem_id));
      j["function"] = result.function_name;
      j["scenario_template"] = scenario_json(result.scenario_template);
      j["coarse_x"] = result.coarse_x;
      j["coarse_ratio"] = result.coarse_ratio;
      j["x_star"] = result.x_star;
      j["ratio"] = result.ratio;
      j["evaluations"] = result.evaluations;
      j["degenerate"] = result.degenerate;
      doc["result"] = std::move(j);
      return doc.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::ostringstream out;
      csv_header(out, "sharpness", opts);
      out << "theorem,function,a,b,mu,alpha,m,M,p,q,coarse_x,coarse_ratio,"
             "x_star,ratio,evaluations,degenerate\n";
      const Scenario& s = result.scenario_template;
      out << to_string(result.theorem_id) << ','
          << csv_escape(result.function_name) << ',' << g17(s.a) << ','
          << g17(s.b) << ',' << g17(s.mu) << ',' << g17(s.alpha) << ','
          << g17(s.m) << ',' << g17(s.M) << ',' << g17(s.p) << ',' << g17(s.q)
          << ',' << g17(result.coarse_x) << ',' << g17(result.coarse_ratio)
          << ',' << g17(result.x_star) << ',' << g17(result.ratio) << ','
          << result.evaluations << ',' << (result.degenerate ? 1 : 0) << '\n';
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      text_header(out, "sharpness", opts);
      out << "theorem: " << to_string(result.theorem_id) << '\n';
      out << "function: " << result.function_name << '\n';
      text_scenario(out, result.scenario_template);
      out << "coarse best: ratio " << g12(result.coarse_ratio) << " at x = "
          << g12(result.coarse_x) << '\n';
      out << "refined best: ratio " << g12(result.ratio) << " at x = "
          << g12(result.x_star) << '\n';
      out << "evaluations: " << result.evaluations << '\n';
      if (result.degenerate) out << "degenerate: rhs <= 0 encountered\n";
      return out.str();
    }
  }
  return {};
}

std::string render_findings_report(const std::vector<Finding>& findings,
                                   const ReportOptions& opts) {
  switch (opts.format) {
    case ReportFormat::json: {
      ordered_json doc = json_header("findings", opts);
      ordered_json rows = ordered_json::array();
      for (const Finding& f : findings) {
        ordered_json j;
        j["name"] = f.name;
        j["statement"] = f.statement;
        ordered_json values;
        for (const auto& [key, value] : f.values) values[key] = value;
        j["values"] = std::move(values);
        rows.push_back(std::move(j));
      }
      doc["findings"] = std::move(rows);
      return doc.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::ostringstream out;
      csv_header(out, "findings", opts);
      out << "finding,key,value\n";
      for (const Finding& f : findings)
        for (const auto& [key, value] : f.values)
          out << csv_escape(f.name) << ',' << csv_escape(key) << ','
              << g17(value) << '\n';
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      text_header(out, "findings", opts);
      if (findings.empty()) out << "(no findings requested)\n";
      for (const Finding& f : findings) {
        out << "finding: " << f.name << '\n';
        out << "  " << f.statement << '\n';
        for (const auto& [key, value] : f.values)
          out << "  " << key << " = " << g12(value) << '\n';
      }
      return out.str();
    }
  }
  return {};
}

}  // namespace frost
