#pragma once

#include <iosfwd>

namespace qmeur {

inline constexpr const char* kVersion = "0.1.0";

/// Entry point of the qmeur command-line tool. Subcommands: compute,
/// scenario, version. Returns the process exit code; diagnostics go to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmeur
