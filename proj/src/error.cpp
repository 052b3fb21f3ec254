#include "qtorsion/error.hpp"

namespace qtorsion {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedNumber: return "MalformedNumber";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::MalformedExpression: return "MalformedExpression";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSameSpan: return "NotSameSpan";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::LinearlyDependent: return "LinearlyDependent";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::NotChainMap: return "NotChainMap";
    case ErrorCode::ComplexMismatch: return "ComplexMismatch";
    case ErrorCode::NotQuasiIsomorphism: return "NotQuasiIsomorphism";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::NotSelfMap: return "NotSelfMap";
    case ErrorCode::InvalidBasisChoice: return "InvalidBasisChoice";
    case ErrorCode::PositiveRankHomology: return "PositiveRankHomology";
    case ErrorCode::NotQuasiIsomorphismAfterTensor:
      return "NotQuasiIsomorphismAfterTensor";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
  }
  return "Unknown";
}

namespace {

std::string compose_message(ErrorCode code, const std::string& detail,
                            std::optional<int> degree) {
  std::string msg(error_name(code));
  if (degree) msg += " at degree " + std::to_string(*degree);
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, std::string detail, std::optional<int> degree)
    : std::runtime_error(compose_message(code, detail, degree)),
      code_(code),
      degree_(degree),
      detail_(std::move(detail)) {}

}  // namespace qtorsion
