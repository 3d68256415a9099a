#pragma once

#include <string>
#include <vector>

namespace dmst {

// Full command-line entry point (argv without the program name).
// Returns the process exit status; failures print one diagnostic line
// to stderr.
int runCli(const std::vector<std::string>& args);

} // namespace dmst
