#pragma once

// cli.hpp — command-line front end, callable in-process so tests can drive
// it directly. Subcommands: classify, datko, barbashin, evolve, explore.
//
// Exit codes: 0 success (stable class / series pass); 2 input error;
// 3 "none" verdict or series fail/divergent; 4 series inconclusive.

#include <iosfwd>
#include <string>
#include <vector>

namespace expstab::cli {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace expstab::cli
