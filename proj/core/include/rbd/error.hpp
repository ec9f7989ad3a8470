#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rbd {

enum class ErrorKind {
  // input documents
  ParseError,
  // domain validation
  InvalidParameters,
  InvalidSingularity,
  InvalidChain,
  UnrecognizedChain,
  ParityViolation,
  UnknownLabel,
  DuplicateLabel,
  // computation
  SingularMatrix,
  NotContractible,
  NonIntegralToddGenus,
  NotGeneralType,
  DivisionByZero,
};

enum class ErrorCategory { Parse, Validation, Computation };

std::string_view kind_name(ErrorKind kind) noexcept;
ErrorCategory category_of(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept { return category_of(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace rbd
