#ifndef OPERADLAB_PAPER_SUITE_HPP
#define OPERADLAB_PAPER_SUITE_HPP

#include <string>
#include <vector>

namespace operadlab {

// One reproduction check. `detail` is deterministic (no timings, no
// addresses); `seconds` is the measured wall clock for the stage the budget
// applies to, `budget_seconds` <= 0 when no budget is stated.
struct CriterionResult {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct PaperSuiteOptions {
  bool allow_arity6 = false;  // adds the d_6 = 301 check (minutes of runtime)
};

// The paper's computations, one result per acceptance criterion (1..8; the
// arity-6 extension appears as "1x" when enabled).
std::vector<CriterionResult> run_paper_suite(const PaperSuiteOptions& options);

}  // namespace operadlab

#endif
