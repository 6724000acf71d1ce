#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace cyltor::cli {

struct RunResult {
    nlohmann::ordered_json report;
    int exit_code = 0;   // 0 ok, 1 usage error, 2 mathematical rejection
    std::string pretty;  // human rendering when --pretty was given
    bool use_pretty = false;
};

/// Execute one CLI invocation (argv without the program name). Pure apart
/// from reading cylinder descriptor files; reports embed the command record
/// so reruns are reproducible.
RunResult run_command(const std::vector<std::string>& args);

/// Render to stdout and return the exit code (used by the binary).
int run_main(int argc, char** argv);

} // namespace cyltor::cli
