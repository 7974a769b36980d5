#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omvar {

// Entry point shared by the omvar binary and the in-process CLI tests.
// Returns the process exit code: 0 pass, 1 verification fail, 2 input
// error, 3 resource guard.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace omvar
