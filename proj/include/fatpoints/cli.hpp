#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fatpoints/gens.hpp"

namespace fatpoints {

inline constexpr std::string_view kEngineVersion = "1.0.0";

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitRefused = 1,
  kExitUsage = 2,
  kExitOracleMismatch = 3,
};

/// Runs one command line (without the program name). Results go to `out`
/// (or to the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Two-column Betti table: column 0 holds generators, column 1 syzygies,
/// and row k lists the counts in degree k + column.
std::string betti_table(const BettiResolution& res);

}  // namespace fatpoints
