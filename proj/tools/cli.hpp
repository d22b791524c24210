#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcanet {

// Runs one CLI invocation. args excludes the program name. Returns the exit
// code: 0 for success or a positive verdict, 1 for a negative verdict, 2 for
// usage and input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lcanet
