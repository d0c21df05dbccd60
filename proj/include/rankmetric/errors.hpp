#pragma once

#include <stdexcept>
#include <string>

namespace rankmetric {

// Raised when an operation's input violates its stated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exhaustive computation would exceed its configured budget.
// Never replaced by sampling.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

}  // namespace rankmetric
