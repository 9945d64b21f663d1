#include "fatpoints/error.hpp"

namespace fatpoints {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::UnsupportedRank: return "unsupported rank";
    case ErrorKind::NotEffective: return "not effective";
    case ErrorKind::OutOfDomain: return "out of domain";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::ConjecturalModeRequired: return "conjectural mode required";
    case ErrorKind::BudgetExceeded: return "budget exceeded";
    case ErrorKind::Overflow: return "integer overflow";
    case ErrorKind::InvariantViolation: return "internal invariant violation";
  }
  return "error";
}

}  // namespace fatpoints
