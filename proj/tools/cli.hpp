// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

#include "nmrsim/error.hpp"

namespace nmrsim::cli {

/// Process exit codes. Stable: scripts depend on them.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,       // bad arguments, unreadable or malformed input files
  kRegression = 2,  // a regression baseline or internal assertion failed
  kValidation = 3,  // an input violates a physical invariant
  kDimension = 4,   // inputs have incompatible or unsupported dimensions
};

ExitCode exit_code_for(ErrorCode code) noexcept;

/// Runs the command line and returns the process exit code. Reports go to
/// `out`, diagnostics to `err`.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace nmrsim::cli
