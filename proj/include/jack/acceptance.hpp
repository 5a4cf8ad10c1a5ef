#pragma once

#include <functional>
#include <string>
#include <vector>

namespace jack {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  unsigned jobs = 1;
  /// Empty runs every criterion.
  std::vector<int> only;
};

constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});
/// "PASS  3  title  (1.23 s)  detail"
std::string format_result(const CriterionResult& result);

/// Runs body(i) for i in [0, count) on up to `jobs` threads; rethrows the first failure.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace jack
