#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "hybridtext/rational.h"

namespace hybridtext {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitTraining = 3,
  kExitModelFormat = 4,
};

// Entry point of the `hybridtext` tool. Subcommands: train, classify,
// evaluate, mine, generate. `in` supplies document text for classify when
// no input path (or "-") is given.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

// "1..5", "3", "1,4,9" and mixtures such as "1..3,7".
std::vector<std::uint64_t> parse_seed_list(std::string_view text);
// Comma-separated rationals, e.g. "0.1,0.2,1/3".
std::vector<Rational> parse_fraction_list(std::string_view text);

}  // namespace hybridtext
