#pragma once

#include <stdexcept>
#include <string>

namespace twistcheck {

enum class ErrorCode {
  OddGenusRequired,
  UnknownSymmetry,
  UnknownCurve,
  GenusMismatch,
  TwoSidedRequired,
  UnknownToken,
  MalformedExponent,
  SingularGenerator,
  Overflow,
  BadConfig,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::OddGenusRequired: return "OddGenusRequired";
    case ErrorCode::UnknownSymmetry: return "UnknownSymmetry";
    case ErrorCode::UnknownCurve: return "UnknownCurve";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::TwoSidedRequired: return "TwoSidedRequired";
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::MalformedExponent: return "MalformedExponent";
    case ErrorCode::SingularGenerator: return "SingularGenerator";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace twistcheck
