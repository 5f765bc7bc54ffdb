#pragma once

#include <string>
#include <vector>

namespace farey::cli {

struct RunResult {
    int status = 0;  // 0 ok, 1 usage error, 2 domain error
    std::string out; // stdout payload
    std::string err; // diagnostics
};

// Run one CLI invocation; args excludes the program name.
RunResult run(const std::vector<std::string>& args);

} // namespace farey::cli
