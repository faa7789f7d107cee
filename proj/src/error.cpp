#include "augcube/error.hpp"

namespace augcube {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::NotABasis: return "not-a-basis";
    case ErrorKind::NotASubcube: return "not-a-subcube";
    case ErrorKind::InvalidSplit: return "invalid-split";
    case ErrorKind::InvalidEdge: return "invalid-edge";
    case ErrorKind::SelectionFailed: return "selection-failed";
    case ErrorKind::RejectedInput: return "rejected-input";
    case ErrorKind::SearchBudgetExceeded: return "search-budget-exceeded";
    case ErrorKind::InvariantViolation: return "invariant-violation";
    case ErrorKind::OutOfDeskScale: return "out-of-desk-scale";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace augcube
