#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frost/harness.hpp"

namespace frost {

enum class ReportFormat { json, csv, text };

ReportFormat parse_report_format(std::string_view name);
std::string_view to_string(ReportFormat format);
std::string_view to_string(SignConvention sign);
SignConvention parse_sign_convention(std::string_view name);

struct ReportOptions {
  ReportFormat format = ReportFormat::text;
  bool deterministic = false;  // omits the generated_at stamp
};

// All renderers return the complete document, including the header carrying
// tool name, version, and schema version. Text uses 12 significant digits,
// CSV 17 (full round-trip), JSON shortest-round-trip doubles.
std::string render_verify_report(const BoundReport& report,
                                 const ReportOptions& opts = {});
std::string render_sweep_report(const SweepResult& result,
                                const ReportOptions& opts = {});
std::string render_sharpness_report(const SharpnessResult& result,
                                    const ReportOptions& opts = {});
std::string render_findings_report(const std::vector<Finding>& findings,
                                   const ReportOptions& opts = {});

}  // namespace frost
