#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace cgraphs {

// Runs one CLI invocation (argv without the program name). Reports go to out
// as JSON; diagnostics to err. Exit code 0 on success / all checks passing,
// 1 on a check failure, 2 on usage or parse errors.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cgraphs
