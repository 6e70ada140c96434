#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kr {

enum class ErrorKind {
  NonExactDivision,
  InfiniteDimension,
  ReductionFailed,
  TriangularityViolation,
  OddShift,
  IncompatibleBase,
  NotAFactorization,
  ZeroScalar,
  VariableInPotential,
  NotMonicInVariable,
  ResidualVariable,
  ArityMismatch,
  UnsupportedN,
  OrientationMismatch,
  KindMismatch,
  DuplicateUse,
  SyntaxError,
  UnknownParameter,
  ValidationError,
  NonzeroPotential,
  StuckGraph,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for every domain failure; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kr
