#pragma once

namespace frost {

inline constexpr const char* kToolName = "frost";
inline constexpr const char* kToolVersion = "0.1.0";

// Bumped when the JSON/CSV report layout or the expression grammar changes.
inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kExpressionGrammarVersion = 1;

}  // namespace frost
