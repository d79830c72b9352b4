#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adimlab {

enum class ErrorCode {
  OutOfRange,
  SelfLoop,
  BadParameter,
  MalformedHeader,
  TruncatedPayload,
  NonCanonicalPadding,
  SamePair,
  TooSmall,
  TooLarge,
  KTooLarge,
  KExceedsDimensionality,
  Disconnected,
  CapExceeded,
  BudgetExhausted,
  OutOfProvenRange,
  NotATree,
  LimitRequired,
  UnknownTheorem,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TruncatedPayload: return "TruncatedPayload";
    case ErrorCode::NonCanonicalPadding: return "NonCanonicalPadding";
    case ErrorCode::SamePair: return "SamePair";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::KExceedsDimensionality: return "KExceedsDimensionality";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::OutOfProvenRange: return "OutOfProvenRange";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::LimitRequired: return "LimitRequired";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace adimlab
