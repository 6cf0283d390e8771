#include "veralg/error.hpp"

namespace veralg {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnsupportedEntry: return "UnsupportedEntry";
    case ErrorCode::OrbitCapExceeded: return "OrbitCapExceeded";
    case ErrorCode::InfiniteRootSystem: return "InfiniteRootSystem";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::NoInvariantForm: return "NoInvariantForm";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NotNilpotentOrderP: return "NotNilpotentOrderP";
    case ErrorCode::DegenerateCase: return "DegenerateCase";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::NotSL2Node: return "NotSL2Node";
    case ErrorCode::DerivationOrderViolation: return "DerivationOrderViolation";
    case ErrorCode::DegenerateInducedForm: return "DegenerateInducedForm";
    case ErrorCode::PreconditionNotGood: return "PreconditionNotGood";
    case ErrorCode::RelationFailure: return "RelationFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::GoldenMissing: return "GoldenMissing";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

}  // namespace veralg
