#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fano {

enum class ErrorCode {
  // lattice-core
  NotPrimitiveVertex,
  NotConvex,
  OriginNotInterior,
  TooFewVertices,
  WrongOrientation,
  DegenerateSegment,
  OriginOnBoundary,
  NotUnimodular,
  // cones
  DegenerateCone,
  GcdConditionViolated,
  // modseq
  NotPrimitive,
  NonUniformDeterminant,
  ZeroDeterminant,
  NonIntegralWinding,
  GenerationExhausted,
  // numthy
  NotOddPrime,
  InvalidParameters,
  InputTooLarge,
  // classify
  NotConvexAtParameters,
  OrphanPolygonFound,
  PredicateMismatch,
  UniquenessViolation,
  RuleViolation,
  PreconditionViolated,
  // io
  SyntaxError,
  NonIntegerCoordinate,
  MalformedVertex,
  MissingField,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every library failure is reported through this exception. `index()` carries
/// the offending vertex/vector position where one exists; parse errors carry
/// a 1-based line and column.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  static Error at_position(ErrorCode code, const std::string& message,
                           std::size_t line, std::size_t column);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<std::size_t> column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
};

}  // namespace fano
