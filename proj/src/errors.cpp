#include "kr/errors.hpp"

namespace kr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonExactDivision: return "NonExactDivision";
    case ErrorKind::InfiniteDimension: return "InfiniteDimension";
    case ErrorKind::ReductionFailed: return "ReductionFailed";
    case ErrorKind::TriangularityViolation: return "TriangularityViolation";
    case ErrorKind::OddShift: return "OddShift";
    case ErrorKind::IncompatibleBase: return "IncompatibleBase";
    case ErrorKind::NotAFactorization: return "NotAFactorization";
    case ErrorKind::ZeroScalar: return "ZeroScalar";
    case ErrorKind::VariableInPotential: return "VariableInPotential";
    case ErrorKind::NotMonicInVariable: return "NotMonicInVariable";
    case ErrorKind::ResidualVariable: return "ResidualVariable";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnsupportedN: return "UnsupportedN";
    case ErrorKind::OrientationMismatch: return "OrientationMismatch";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::DuplicateUse: return "DuplicateUse";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownParameter: return "UnknownParameter";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::NonzeroPotential: return "NonzeroPotential";
    case ErrorKind::StuckGraph: return "StuckGraph";
  }
  return "Error";
}

}  // namespace kr
