// SPDX-License-Identifier: Apache-2.0
#include "nmrsim/error.hpp"

namespace nmrsim {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DimNotPowerOfTwo: return "DimNotPowerOfTwo";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::BadTrace: return "BadTrace";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::WrongDim: return "WrongDim";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::EpsOutOfRange: return "EpsOutOfRange";
    case ErrorCode::Rho1NotPure: return "Rho1NotPure";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroRepetitions: return "ZeroRepetitions";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::TooManyQubits: return "TooManyQubits";
    case ErrorCode::ZeroShots: return "ZeroShots";
    case ErrorCode::IncompleteSet: return "IncompleteSet";
    case ErrorCode::InvalidSet: return "InvalidSet";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
  }
  return "Unknown";
}

}  // namespace nmrsim
