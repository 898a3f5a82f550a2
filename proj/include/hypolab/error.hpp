#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypolab {

/// Failure categories reported by the library. The CLI prints the name.
enum class ErrorCode {
  Unbalanced,        ///< four-term symbol with n - m != q - p
  Precondition,      ///< argument outside the domain where a closed form holds
  NotHermitian,      ///< matrix fails conjugate symmetry
  ShapeMismatch,     ///< symbol does not have the required exponent layout
  Unsupported,       ///< option recognised but not implemented for this input
  ZeroSymbol,        ///< all-zero symbol where a nonzero one is required
  InvalidSymbol,     ///< exponent constraints (m < n, p < q) violated
  Parse,             ///< malformed rational / JSON / CLI input
  EigenFailure,      ///< floating eigensolver did not converge
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Unbalanced: return "UNBALANCED";
    case ErrorCode::Precondition: return "PRECONDITION";
    case ErrorCode::NotHermitian: return "NOT_HERMITIAN";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
    case ErrorCode::ZeroSymbol: return "ZERO_SYMBOL";
    case ErrorCode::InvalidSymbol: return "INVALID_SYMBOL";
    case ErrorCode::Parse: return "PARSE_ERROR";
    case ErrorCode::EigenFailure: return "EIGEN_FAILURE";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypolab
