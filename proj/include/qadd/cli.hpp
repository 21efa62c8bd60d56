#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qadd {

/// Runs the command-line interface on args (program name excluded). Reports
/// go to out, diagnostics to err. Returns the process exit code:
///   0  check passed / information printed
///   1  a verification failed or a counterexample was found
///   2  usage or input errors (bad flags, malformed expressions, domain
///      violations)
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qadd
