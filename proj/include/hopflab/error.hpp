#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hopflab {

enum class ErrorCode {
  NonPrimeCharacteristic,
  ReducibleModulus,
  DivisionByZero,
  CharacteristicMismatch,
  DimensionMismatch,
  SingularMatrix,
  AlgebraMismatch,
  ModuleAxiomViolation,
  NotAModule,
  NotAHopfAlgebra,
  NoIntegral,
  IntegralSpaceTooBig,
  DegeneratePairing,
  SemisimplicityFailure,
  PreconditionPSquare,
  SingularU,
  NotGrouplike,
  EquivalenceViolation,
  FieldTooSmall,
  NotSemisimple,
  NonSquareBlock,
  DimensionNotInvertible,
  InconsistentSchur,
  BudgetExceeded,
  NotInvertible,
  NormalizationFails,
  CocycleFails,
  CharacteristicDividesOrder,
  InvalidGroupTable,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when splitting the center needs a larger field. `degree` is the
/// factor by which the current extension degree must be multiplied.
class FieldTooSmall : public Error {
 public:
  FieldTooSmall(int degree, const std::string& what)
      : Error(ErrorCode::FieldTooSmall, what), degree_(degree) {}

  int required_degree() const noexcept { return degree_; }

 private:
  int degree_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hopflab
