#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace robustflow {

enum class ErrorKind {
  kParse,
  kInvalidInstance,
  kPathLimitExceeded,
  kEnumerationBudgetExceeded,
  kInfiniteCapacity,
  kNotAFlow,
  kNotUnitCapacity,
  kCapacityOutOfRange,
  kNonIntegralCapacity,
  kNotFeasible,
  kUnboundedFlow,
  kInvalidCliqueSize,
  kSizeMismatch,
  kInvalidTerminals,
  kNotDisjoint,
  kInvalidArgument,
  kSolverFailure,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure raised by the library carries a kind so that callers (the CLI
// in particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Budget gates signal that the instance is outside desk-scale scope rather
  // than malformed.
  bool is_budget_gate() const noexcept {
    return kind_ == ErrorKind::kPathLimitExceeded ||
           kind_ == ErrorKind::kEnumerationBudgetExceeded;
  }

 private:
  ErrorKind kind_;
};

}  // namespace robustflow
