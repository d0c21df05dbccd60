#pragma once

// The operations behind the CLI subcommands and the Python module. Inputs are
// spec JSON objects (see io.hpp); each call returns the result object of a
// report plus the method actually used and a truth bit (false maps to exit 1).
// PreconditionError and BudgetError propagate to the caller.

#include <string>
#include <vector>

#include "rankmetric/io.hpp"

namespace rankmetric::commands {

using io::json;

struct Options {
  std::string field;         // "p,lambda,n[,modulus]"; overrides the input's field when set
  std::uint64_t budget = 0;  // 0: per-operation default
  std::uint64_t table_budget = kDefaultFieldBudget;  // largest field that gets log tables
  std::string method = "both";  // closed | oracle | both
  bool all_witnesses = false;
  std::string equiv_mode = "closed";  // closed | monomial | full
  bool list = false;                  // aut: list triples (forces enumeration)
  std::string kind = "both";          // nucleus: right | middle | both
  std::vector<int> only;              // verify: criteria to run, empty for all
};

struct Outcome {
  json result;
  std::string method;
  bool truth = true;
};

Outcome construct(const json& spec, const Options& o);
Outcome check(const json& spec, const Options& o);
Outcome dual(const json& spec, const Options& o);
Outcome adjoint(const json& spec, const Options& o);
Outcome nucleus(const json& spec, const Options& o);
Outcome gamma(int n, int r, int s, int k, const Options& o);
Outcome equiv(const json& a, const json& b, const Options& o);
// Under method "both" an enumeration over budget falls back to the closed form
// with a warning in the result; under "oracle" or with list it throws.
Outcome aut(const json& spec, const Options& o);
Outcome verify(const Options& o);

}  // namespace rankmetric::commands
