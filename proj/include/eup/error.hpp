#pragma once

#include <stdexcept>
#include <string>

namespace eup {

enum class ErrorCode {
  NonSquare,
  NotHermitian,
  NotPositive,
  NotPsd,
  NotIsometry,
  NotNormalized,
  CompletenessViolated,
  DimensionMismatch,
  NotProjective,
  AllOutcomesNull,
  DecompositionMissing,
  BadOutcomeCount,
  BadAmbientDim,
  UnknownGroup,
  OutOfRange,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eup
