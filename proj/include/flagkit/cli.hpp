#pragma once

#include <iostream>
#include <string>
#include <vector>

#include "flagkit/report.hpp"

namespace flagkit {

struct BatchJob {
    std::string command;  // e.g. "describe", "check injectivity", "cup-search"
    std::string group;
    std::string weight;  // optional
    std::map<std::string, std::string> options;
};

struct BatchConfig {
    std::vector<BatchJob> jobs;
};

/// Parses the JSON batch file; throws std::invalid_argument if any job does
/// not reference a supported command or fails to parse.
BatchConfig parse_batch_config(const std::string& json_text);

/// Entry point behind the `flagkit` binary. Exit codes: 0 all checks passed
/// (flagged counts as passed, with a warning on `err`), 1 a mathematical
/// check failed, 2 parse/usage errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagkit
