#include "error.hpp"

namespace tgf {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return "parse_error";
    case ErrorCode::kNonDyadic:
      return "non_dyadic";
    case ErrorCode::kNonMonotone:
      return "non_monotone";
    case ErrorCode::kBadSlope:
      return "bad_slope";
    case ErrorCode::kTailMismatch:
      return "tail_mismatch";
    case ErrorCode::kPeriodSeedMismatch:
      return "period_seed_mismatch";
    case ErrorCode::kWindowInconsistency:
      return "window_inconsistency";
    case ErrorCode::kProbeMismatch:
      return "probe_mismatch";
    case ErrorCode::kNotAutomorphism:
      return "not_automorphism";
    case ErrorCode::kDimensionMismatch:
      return "dimension_mismatch";
    case ErrorCode::kInternal:
      return "internal_error";
  }
  return "internal_error";
}

}  // namespace tgf
