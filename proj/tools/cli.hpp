#pragma once

#include <ostream>

namespace cvd::cli {

/// Exit codes shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  ///< infeasible instance / invalid solution
inline constexpr int kInputError = 2;

/// Entry point of the `cvd` tool; stdout and stderr are injectable so tests
/// can capture them.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cvd::cli
