#ifndef CRAG_ERRORS_HPP
#define CRAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crag {

// Stable error codes surfaced verbatim through the CLI.
enum class ErrorCode {
  DimensionMismatch,
  IndexOutOfRange,
  ExponentTooSmall,
  CenterOnVariety,
  EmptyInput,
  ZeroPolynomial,
  ShearBudgetExhausted,
  NotZeroDimensional,
  RefinementLimit,
  NotSymmetric,
  ScaleLimit,
  BitBudgetExceeded,
  NoMajority,
  WitnessBudgetExhausted,
  DegenerateSlice,
  NonReducedInput,
  NotRegular,
  MorseBudgetExhausted,
  ChartInvalid,
  NonIntegralChi,
  BlockBudget,
  NoStabilization,
  Undecided,
  UnknownExample,
  ParseError,
  InvariantViolation,
  Internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ExponentTooSmall: return "ExponentTooSmall";
    case ErrorCode::CenterOnVariety: return "CenterOnVariety";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ShearBudgetExhausted: return "ShearBudgetExhausted";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::RefinementLimit: return "RefinementLimit";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ScaleLimit: return "ScaleLimit";
    case ErrorCode::BitBudgetExceeded: return "BitBudgetExceeded";
    case ErrorCode::NoMajority: return "NoMajority";
    case ErrorCode::WitnessBudgetExhausted: return "WitnessBudgetExhausted";
    case ErrorCode::DegenerateSlice: return "DegenerateSlice";
    case ErrorCode::NonReducedInput: return "NonReducedInput";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::MorseBudgetExhausted: return "MorseBudgetExhausted";
    case ErrorCode::ChartInvalid: return "ChartInvalid";
    case ErrorCode::NonIntegralChi: return "NonIntegralChi";
    case ErrorCode::BlockBudget: return "BlockBudget";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::Undecided: return "Undecided";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace crag

#endif
