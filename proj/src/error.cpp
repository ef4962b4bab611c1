#include "punctual/error.hpp"

namespace punctual {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::DivisionByZero: return "DivisionByZero";
  case ErrorCode::OrderMismatch: return "OrderMismatch";
  case ErrorCode::TruncMismatch: return "TruncMismatch";
  case ErrorCode::NotSaturated: return "NotSaturated";
  case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
  case ErrorCode::EqualIdeals: return "EqualIdeals";
  case ErrorCode::NotContained: return "NotContained";
  case ErrorCode::NotAnIdeal: return "NotAnIdeal";
  case ErrorCode::IdealIsUnitIdeal: return "IdealIsUnitIdeal";
  case ErrorCode::OutOfRange: return "OutOfRange";
  case ErrorCode::InvalidSpec: return "InvalidSpec";
  case ErrorCode::PatternViolation: return "PatternViolation";
  case ErrorCode::SpecMismatch: return "SpecMismatch";
  case ErrorCode::NotCirculant: return "NotCirculant";
  case ErrorCode::ChainInvariantViolated: return "ChainInvariantViolated";
  case ErrorCode::DimensionBound: return "DimensionBound";
  case ErrorCode::RequiresFGreaterOne: return "RequiresFGreaterOne";
  case ErrorCode::ImproperIdeal: return "ImproperIdeal";
  case ErrorCode::NotSmoothRam: return "NotSmoothRam";
  case ErrorCode::UnsaturatedInput: return "UnsaturatedInput";
  case ErrorCode::ZeroPoint: return "ZeroPoint";
  case ErrorCode::NotCosimple: return "NotCosimple";
  case ErrorCode::CertificateMismatch: return "CertificateMismatch";
  case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

} // namespace punctual
