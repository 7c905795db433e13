#ifndef SIGGB_TOOLS_CLI_HPP
#define SIGGB_TOOLS_CLI_HPP

#include "siggb/engine.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace siggb::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

/// The flat stats record, keys in their fixed order.
std::string stats_json(const RunStats& stats);

/// The whole command line minus the program name. Output and diagnostics go
/// to the given streams; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace siggb::cli

#endif
