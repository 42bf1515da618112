#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace szilard {

enum class ErrorCode {
  NotNormalized,
  BadOutcomeLength,
  NegativeProbability,
  ProbabilityOutOfRange,
  DuplicateOutcome,
  SupportOverflow,
  WeightSumError,
  MixedArity,
  ArityMismatch,
  EmptySubset,
  IndexOutOfRange,
  DuplicatePosition,
  NotBijective,
  BadEpsilon,
  BiasedBitsPresent,
  SamePosition,
  NonpositiveTemperature,
  InvalidBets,
  BadBetSize,
  SymbolicPlan,
  TooLarge,
  ParseError,
  InvalidArgument,
  InvariantViolation,
};

/// Stable identifier used in machine-readable error output.
constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::BadOutcomeLength: return "BadOutcomeLength";
    case ErrorCode::NegativeProbability: return "NegativeProbability";
    case ErrorCode::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorCode::DuplicateOutcome: return "DuplicateOutcome";
    case ErrorCode::SupportOverflow: return "SupportOverflow";
    case ErrorCode::WeightSumError: return "WeightSumError";
    case ErrorCode::MixedArity: return "MixedArity";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicatePosition: return "DuplicatePosition";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::BadEpsilon: return "BadEpsilon";
    case ErrorCode::BiasedBitsPresent: return "BiasedBitsPresent";
    case ErrorCode::SamePosition: return "SamePosition";
    case ErrorCode::NonpositiveTemperature: return "NonpositiveTemperature";
    case ErrorCode::InvalidBets: return "InvalidBets";
    case ErrorCode::BadBetSize: return "BadBetSize";
    case ErrorCode::SymbolicPlan: return "SymbolicPlan";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace szilard
