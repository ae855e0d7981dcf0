#ifndef RELAXCOL_THEOREM_SUITE_H_
#define RELAXCOL_THEOREM_SUITE_H_

#include <string>
#include <vector>

namespace relaxcol {

// Outcome of one reproduction check. `passed` already accounts for the
// time budget.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

// Runs check `id` (1..kCriterionCount). Throws InvalidParameterError for
// other ids.
CriterionResult RunCriterion(int id);

std::vector<CriterionResult> RunTheoremSuite();

// One line per result: "PASS  3  complete graphs ...  (0.42 s / 30 s) ...".
std::string FormatResult(const CriterionResult& r);

}  // namespace relaxcol

#endif  // RELAXCOL_THEOREM_SUITE_H_
