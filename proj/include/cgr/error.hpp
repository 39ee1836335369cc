#pragma once

#include <stdexcept>
#include <string>

namespace cgr {

enum class ErrorCode {
  kInvalidParams,
  kInvalidPlacement,
  kInvalidPermutation,
  kLengthMismatch,
  kOffsetOutOfRange,
  kMissingVertex,
  kInvalidArgument,
  kUnrecoverable,
  kContractShape,
  kBudgetExceeded,
  kParse,
  kUnknownFixture,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams: return "INVALID_PARAMS";
    case ErrorCode::kInvalidPlacement: return "INVALID_PLACEMENT";
    case ErrorCode::kInvalidPermutation: return "INVALID_PERMUTATION";
    case ErrorCode::kLengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::kOffsetOutOfRange: return "OFFSET_OUT_OF_RANGE";
    case ErrorCode::kMissingVertex: return "MISSING_VERTEX";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kUnrecoverable: return "UNRECOVERABLE";
    case ErrorCode::kContractShape: return "CONTRACT_SHAPE";
    case ErrorCode::kBudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::kParse: return "PARSE";
    case ErrorCode::kUnknownFixture: return "UNKNOWN_FIXTURE";
  }
  return "UNKNOWN";
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

}  // namespace cgr
