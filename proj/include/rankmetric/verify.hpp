#pragma once

// The acceptance ledger: nine criteria, each reproduced at desk scale with its
// own time limit. Used by the acceptance binary and by `rankmetric verify-paper`.

#include <functional>
#include <string>
#include <vector>

namespace rankmetric {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

// Runs the selected criteria (all when ids is empty), in order. on_result is
// called as each one finishes.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result_line(const CriterionResult& r);

}  // namespace rankmetric
