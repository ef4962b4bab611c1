#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace punctual {

enum class ErrorCode {
  DivisionByZero,
  OrderMismatch,
  TruncMismatch,
  NotSaturated,
  PrecisionExhausted,
  EqualIdeals,
  NotContained,
  NotAnIdeal,
  IdealIsUnitIdeal,
  OutOfRange,
  InvalidSpec,
  PatternViolation,
  SpecMismatch,
  NotCirculant,
  ChainInvariantViolated,
  DimensionBound,
  RequiresFGreaterOne,
  ImproperIdeal,
  NotSmoothRam,
  UnsaturatedInput,
  ZeroPoint,
  NotCosimple,
  CertificateMismatch,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Precondition or contract failure. `offending` carries a printable
// description of the element or entry that triggered the failure, if any.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message, std::string offending = {})
      : std::runtime_error(message), code_(code), offending_(std::move(offending)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& offending() const noexcept { return offending_; }

private:
  ErrorCode code_;
  std::string offending_;
};

} // namespace punctual
