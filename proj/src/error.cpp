#include "fano/error.hpp"

namespace fano {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrimitiveVertex: return "NotPrimitiveVertex";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::WrongOrientation: return "WrongOrientation";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::OriginOnBoundary: return "OriginOnBoundary";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::DegenerateCone: return "DegenerateCone";
    case ErrorCode::GcdConditionViolated: return "GcdConditionViolated";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NonUniformDeterminant: return "NonUniformDeterminant";
    case ErrorCode::ZeroDeterminant: return "ZeroDeterminant";
    case ErrorCode::NonIntegralWinding: return "NonIntegralWinding";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::NotOddPrime: return "NotOddPrime";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::InputTooLarge: return "InputTooLarge";
    case ErrorCode::NotConvexAtParameters: return "NotConvexAtParameters";
    case ErrorCode::OrphanPolygonFound: return "OrphanPolygonFound";
    case ErrorCode::PredicateMismatch: return "PredicateMismatch";
    case ErrorCode::UniquenessViolation: return "UniquenessViolation";
    case ErrorCode::RuleViolation: return "RuleViolation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonIntegerCoordinate: return "NonIntegerCoordinate";
    case ErrorCode::MalformedVertex: return "MalformedVertex";
    case ErrorCode::MissingField: return "MissingField";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      index_(index) {}

Error Error::at_position(ErrorCode code, const std::string& message,
                         std::size_t line, std::size_t column) {
  Error e(code, message + " (line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ")");
  e.line_ = line;
  e.column_ = column;
  return e;
}

}  // namespace fano
