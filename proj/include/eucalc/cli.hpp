#ifndef EUCALC_CLI_HPP
#define EUCALC_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace eucalc {

// Runs one CLI invocation. Exit codes: 0 success, 1 check failure (a
// counterexample or failing replay was written), 2 usage or schema error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eucalc

#endif
