#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qtorsion {

enum class ErrorCode {
  // scalars
  MalformedNumber,
  ZeroDenominator,
  DivisionByZero,
  DivisionByZeroPolynomial,
  MalformedExpression,
  // linear algebra
  NotSquare,
  Singular,
  DimensionMismatch,
  NotSameSpan,
  NoSolution,
  LinearlyDependent,
  // complexes and maps
  ShapeMismatch,
  NotAComplex,
  FieldMismatch,
  DegreeOutOfRange,
  NotChainMap,
  ComplexMismatch,
  NotQuasiIsomorphism,
  NotAcyclic,
  NotSelfMap,
  InvalidBasisChoice,
  // polynomial complexes
  PositiveRankHomology,
  NotQuasiIsomorphismAfterTensor,
  NotPolynomial,
  // front end
  ParseError,
  UsageError,
  ParamOutOfRange,
};

std::string_view error_name(ErrorCode code);

/// Every failure in the library is reported through this type. `degree` is
/// set when the failing invariant is attached to one degree of a complex.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail = {},
        std::optional<int> degree = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<int> degree() const noexcept { return degree_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::optional<int> degree_;
  std::string detail_;
};

}  // namespace qtorsion
