#pragma once

#include <stdexcept>
#include <string>

namespace collin {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid input data (CSV, roles, shapes).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Exact (or numerically exact) multicollinearity: X'X cannot be inverted.
class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(const std::string& detail = {})
      : Error(detail.empty()
                  ? std::string(kMessage)
                  : std::string(kMessage) + " (" + detail + ")") {}

  static constexpr const char* kMessage =
      "exact or near-exact multicollinearity: XᵀX numerically singular";
};

/// A measure that does not apply to the given design (e.g. VIF with a single
/// quantitative regressor). The message is user-facing guidance.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace collin
