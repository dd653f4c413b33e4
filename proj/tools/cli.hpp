#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ifd/dimension.hpp"

namespace ifd::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitOracleMismatch = 3;

/// kExitOk when the reports agree within 1e-9, otherwise writes a diagnostic
/// naming `context` to `err` and returns kExitOracleMismatch.
int oracle_verdict(const DimensionReport& main, const DimensionReport& reference,
                   std::string_view context, std::ostream& err);

/// Runs the command line `args` (without the program name). All output goes
/// to `out`/`err`; nothing touches the process streams directly.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ifd::cli
