#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fatpoints {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  UnsupportedRank,
  NotEffective,
  OutOfDomain,
  Precondition,
  ConjecturalModeRequired,
  BudgetExceeded,
  Overflow,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the engine. The kind distinguishes refused
/// inputs from internal invariant violations.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace fatpoints
