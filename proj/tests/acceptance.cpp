// Acceptance ledger: one PASS/FAIL line per criterion.
//
//   acceptance [--only 1,3,8] [--expect-fail 8]
//
// Exit status is 0 when the set of failing criteria equals the --expect-fail set
// (empty by default), 1 otherwise.

#include <CLI11.hpp>
#include <cstdio>
#include <set>

#include "rankmetric/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rank-metric acceptance suite"};
  std::vector<int> only, expect_fail;
  app.add_option("--only", only, "criteria to run")->delimiter(',');
  app.add_option("--expect-fail", expect_fail, "criteria known to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  std::set<int> failed;
  rankmetric::run_acceptance(only, [&](const rankmetric::CriterionResult& r) {
    std::printf("%s\n", rankmetric::format_result_line(r).c_str());
    std::fflush(stdout);
    if (!r.pass) failed.insert(r.id);
  });
  std::set<int> expected;
  for (int id : expect_fail)
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) expected.insert(id);
  if (failed != expected) {
    std::printf("failing criteria differ from the expected set\n");
    return 1;
  }
  return 0;
}
