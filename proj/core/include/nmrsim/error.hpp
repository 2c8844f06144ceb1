// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nmrsim {

enum class ErrorCode {
  NotSquare,
  DimNotPowerOfTwo,
  NotHermitian,
  BadTrace,
  NotPSD,
  NotUnitary,
  NotNormalized,
  DimMismatch,
  WrongDim,
  WrongLength,
  EpsOutOfRange,
  Rho1NotPure,
  IndexOutOfRange,
  ZeroRepetitions,
  InvalidWeight,
  TooManyQubits,
  ZeroShots,
  IncompleteSet,
  InvalidSet,
  NumericalFailure,
  ParseError,
  ValidationFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for every library failure. `magnitude()` carries the
/// measured quantity that violated the invariant (deviation, eigenvalue, ...)
/// when there is one, and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, double magnitude = 0.0)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        magnitude_(magnitude),
        message_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// what() without the leading code name.
  const std::string& message() const noexcept { return message_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  ErrorCode code_;
  double magnitude_;
  std::string message_;
};

}  // namespace nmrsim
