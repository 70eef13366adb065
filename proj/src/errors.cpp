#include "ordgen/errors.hpp"

namespace ordgen {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::InvalidTwist: return "InvalidTwist";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::IndexNotDividingDegree: return "IndexNotDividingDegree";
    case ErrorKind::ExceptionalPrimeNeedsOverride: return "ExceptionalPrimeNeedsOverride";
    case ErrorKind::Exceptional: return "Exceptional";
    case ErrorKind::NoCutoff: return "NoCutoff";
    case ErrorKind::BoundTooSmall: return "BoundTooSmall";
    case ErrorKind::EmptySpec: return "EmptySpec";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ordgen
