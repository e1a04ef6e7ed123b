#pragma once

#include <ostream>

namespace gammahom {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    ExitOk = 0,
    ExitUsage = 1,
    ExitParse = 2,
    ExitTooLarge = 3,
    ExitVerdictFails = 4,
    ExitInvalidSpec = 5,
};

/// Runs the command line against `out`; diagnostics go to `err`.
auto run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;

}
