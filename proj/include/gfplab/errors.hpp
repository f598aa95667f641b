#pragma once

#include <stdexcept>
#include <string>

namespace gfp {

enum class ErrorCode {
  DomainError,
  ParseError,
  ZeroPolynomial,
  WrongKind,
  HypothesisViolated,
  DegenerateDiscriminant,
  DegenerateG,
  NoRootsFound,
  PositiveG,
  NoRealSupport,
  NonMonotoneD,
  GeneratorAxiomViolation,
  TruncationTooSmall,
  SupportViolation,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) {
  throw Error(c, msg);
}

}  // namespace gfp
