#pragma once

#include <string>
#include <vector>

#include "frost/bounds.hpp"

namespace frost {

// Cartesian sweep description. Cells are enumerated lexicographically in
// the order (function, a, b, x, mu, alpha, m, M, p, q); that order is part
// of the output contract. x values are absolute coordinates: combinations
// that violate scenario invariants (say x outside [a, b]) become error
// cells rather than aborting the sweep.
struct SweepSpec {
  TheoremId theorem_id = TheoremId::theorem1;
  std::vector<std::string> functions;  // family descriptors, see funclib
  std::vector<double> a{0.0};
  std::vector<double> b{1.0};
  std::vector<double> x{0.5};
  std::vector<double> mu{1.0};
  std::vector<double> alpha{1.0};
  std::vector<double> m{1.0};
  std::vector<double> M{1.0};
  std::vector<double> p{1.0};
  std::vector<double> q{2.0};
  VerifyConfig verify;
  long seed = 0;   // echoed into reports; reserved for randomized strategies
  int threads = 0; // 0 = hardware concurrency; FRAC_OSTROWSKI_THREADS caps it
};

// One sweep cell: either a report or the error that prevented one.
struct SweepCell {
  std::size_t index = 0;
  std::string function;
  BoundReport report;
  std::string error;  // non-empty means `report` is not meaningful
};

struct SweepSummary {
  long total = 0;
  long holds = 0;
  long fails = 0;
  long hypothesis_violations = 0;
  long accuracy_flagged = 0;
  long errors = 0;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepCell> cells;  // enumeration order
  SweepSummary summary;
};

// Runs every cell independently (parallel across worker threads, results
// reassembled in enumeration order) and tallies the summary. Throws only
// for malformed specs (unknown family, empty function list is allowed and
// yields an empty result).
SweepResult run_sweep(const SweepSpec& spec);

struct SharpnessStrategy {
  enum class Kind { grid, golden };
  Kind kind = Kind::golden;
  int grid_n = 65;    // grid strategy: number of x samples
  double tol = 1e-6;  // golden strategy: x resolution relative to (b - a)
};

// Maximum of lhs/rhs over x in [a + eps, b - eps], eps = 1e-6 (b - a).
// Golden-section refinement is seeded from a coarse grid and assumes local
// unimodality; both the coarse best and the refined best are recorded.
// Ties resolve toward the smaller x.
struct SharpnessResult {
  TheoremId theorem_id = TheoremId::theorem1;
  std::string function_name;
  Scenario scenario_template;
  double coarse_x = 0.0;
  double coarse_ratio = 0.0;
  double x_star = 0.0;
  double ratio = 0.0;
  long evaluations = 0;
  bool degenerate = false;  // an rhs <= 0 cell was encountered
};

SharpnessResult sharpness_search(TheoremId id, const FunctionSpec& f,
                                 const Scenario& scenario_template,
                                 const SharpnessStrategy& strategy = {},
                                 const VerifyConfig& cfg = {});

// A reproducible numeric demonstration of one formula discrepancy.
struct Finding {
  std::string name;
  std::string statement;
  std::vector<std::pair<std::string, double>> values;
};

// The two discrepancies this tool demonstrates: the sign needed to make the
// derivative-side identity hold, and the missing M^(1/q) factor (plus the
// frozen exponent-2 geometry) in the printed alpha = m = 1 q-norm corollary.
std::vector<Finding> discrepancy_findings();

}  // namespace frost
