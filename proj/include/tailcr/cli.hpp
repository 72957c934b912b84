#pragma once

#include <string>
#include <vector>

namespace tailcr {

// Entry point for the command line tool; args excludes the program name.
// Returns 0 on success, 1 on usage or input errors, 2 on numerical failure.
int cli_main(std::vector<std::string> args);

}  // namespace tailcr
