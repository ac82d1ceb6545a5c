#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace danielewski {

#ifdef DANIELEWSKI_SELF_CHECK
inline constexpr bool kSelfCheck = true;
#else
inline constexpr bool kSelfCheck = false;
#endif

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ZeroInput,
  ConstantInput,
  ReducibleModulus,
  ZeroDivisor,
  ConstantModulus,
  ZeroMultiplier,
  DegreeTooLow,
  NonPositiveExponent,
  NotStandardForm,
  NLessThanTwo,
  DegreeMismatch,
  CongruenceFails,
  InvalidTarget,
  SyntaxError,
  ShapeError,
  InternalAssertion,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::ConstantInput: return "ConstantInput";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::ConstantModulus: return "ConstantModulus";
    case ErrorCode::ZeroMultiplier: return "ZeroMultiplier";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::NonPositiveExponent: return "NonPositiveExponent";
    case ErrorCode::NotStandardForm: return "NotStandardForm";
    case ErrorCode::NLessThanTwo: return "NLessThanTwo";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CongruenceFails: return "CongruenceFails";
    case ErrorCode::InvalidTarget: return "InvalidTarget";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }

  // Character offset into the parsed text, for syntax errors.
  std::size_t position() const noexcept { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  ErrorCode code_;
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void ensure(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::InternalAssertion, what);
}

}  // namespace danielewski
