#include "hopflab/error.hpp"

namespace hopflab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::ModuleAxiomViolation: return "ModuleAxiomViolation";
    case ErrorCode::NotAModule: return "NotAModule";
    case ErrorCode::NotAHopfAlgebra: return "NotAHopfAlgebra";
    case ErrorCode::NoIntegral: return "NoIntegral";
    case ErrorCode::IntegralSpaceTooBig: return "IntegralSpaceTooBig";
    case ErrorCode::DegeneratePairing: return "DegeneratePairing";
    case ErrorCode::SemisimplicityFailure: return "SemisimplicityFailure";
    case ErrorCode::PreconditionPSquare: return "PreconditionPSquare";
    case ErrorCode::SingularU: return "SingularU";
    case ErrorCode::NotGrouplike: return "NotGrouplike";
    case ErrorCode::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::NonSquareBlock: return "NonSquareBlock";
    case ErrorCode::DimensionNotInvertible: return "DimensionNotInvertible";
    case ErrorCode::InconsistentSchur: return "InconsistentSchur";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NormalizationFails: return "NormalizationFails";
    case ErrorCode::CocycleFails: return "CocycleFails";
    case ErrorCode::CharacteristicDividesOrder: return "CharacteristicDividesOrder";
    case ErrorCode::InvalidGroupTable: return "InvalidGroupTable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "UnknownError";
}

}  // namespace hopflab
