#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gorbetti {

// Dispatches one command line (without the program name). Returns the
// process exit status: 0 on success, 1 when a reproduction or experiment
// check fails, 2 on usage or input errors. Diagnostics go to err with
// machine-parseable prefixes error[E_USAGE], error[E_INPUT], error[E_LIMIT],
// error[E_CHECK].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gorbetti
