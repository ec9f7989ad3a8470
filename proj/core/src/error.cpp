#include "rbd/error.hpp"

namespace rbd {

std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::InvalidSingularity: return "InvalidSingularity";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::UnrecognizedChain: return "UnrecognizedChain";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotContractible: return "NotContractible";
    case ErrorKind::NonIntegralToddGenus: return "NonIntegralToddGenus";
    case ErrorKind::NotGeneralType: return "NotGeneralType";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

ErrorCategory category_of(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError:
      return ErrorCategory::Parse;
    case ErrorKind::InvalidParameters:
    case ErrorKind::InvalidSingularity:
    case ErrorKind::InvalidChain:
    case ErrorKind::UnrecognizedChain:
    case ErrorKind::ParityViolation:
    case ErrorKind::UnknownLabel:
    case ErrorKind::DuplicateLabel:
      return ErrorCategory::Validation;
    default:
      return ErrorCategory::Computation;
  }
}

}  // namespace rbd
