#ifndef RATREL_CLI_HPP
#define RATREL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ratrel {

// Runs one subcommand (decompose | relate | poset | series) against the
// given streams. Returns 0 on success, 1 on domain errors, 2 on usage
// errors. Output is deterministic.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ratrel

#endif
