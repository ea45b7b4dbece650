#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "orient/error.hpp"

namespace orient::cli {

// 0 feasible / valid, 1 infeasible / none, 2 input or precondition error,
// 3 budget, indeterminate or internal failure.
int exit_status(ErrorCode code);

/// Runs one command.  `args` excludes the program name.  JSON goes to `out`,
/// one-line human summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orient::cli
