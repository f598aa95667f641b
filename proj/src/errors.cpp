#include "gfplab/errors.hpp"

namespace gfp {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case ErrorCode::DegenerateG: return "DegenerateG";
    case ErrorCode::NoRootsFound: return "NoRootsFound";
    case ErrorCode::PositiveG: return "PositiveG";
    case ErrorCode::NoRealSupport: return "NoRealSupport";
    case ErrorCode::NonMonotoneD: return "NonMonotoneD";
    case ErrorCode::GeneratorAxiomViolation: return "GeneratorAxiomViolation";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::SupportViolation: return "SupportViolation";
  }
  return "Error";
}

}  // namespace gfp
