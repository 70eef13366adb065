#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordgen {

enum class ErrorKind {
  NotPrime,
  CapExceeded,
  NotADivisor,
  BudgetExceeded,
  BaseMismatch,
  InvalidTwist,
  NotGenerating,
  UnsupportedRank,
  NotMonic,
  IndexNotDividingDegree,
  ExceptionalPrimeNeedsOverride,
  Exceptional,
  NoCutoff,
  BoundTooSmall,
  EmptySpec,
  InvalidSpec,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ordgen
