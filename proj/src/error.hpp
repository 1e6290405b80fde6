#pragma once

#include <stdexcept>
#include <string>

namespace tgf {

enum class ErrorCode {
  kParse,
  kNonDyadic,
  kNonMonotone,
  kBadSlope,
  kTailMismatch,
  kPeriodSeedMismatch,
  kWindowInconsistency,
  kProbeMismatch,
  kNotAutomorphism,
  kDimensionMismatch,
  kInternal,
};

// Stable machine-readable name ("non_monotone", "bad_slope", ...).
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace tgf
