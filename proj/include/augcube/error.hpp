#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace augcube {

enum class ErrorKind {
  InvalidDimension,
  InvalidInput,
  NotABasis,
  NotASubcube,
  InvalidSplit,
  InvalidEdge,
  SelectionFailed,
  RejectedInput,
  SearchBudgetExceeded,
  InvariantViolation,
  OutOfDeskScale,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can tell misuse apart from search exhaustion.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace augcube
