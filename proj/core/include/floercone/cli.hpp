#pragma once

// Command-line surface. Every command writes a single JSON report to stdout
// and is a pure function of (argv, input file bytes); timing goes to stderr.
// Exit codes: 0 success, 1 domain error (structured error report on stdout),
// 2 usage error.

#include <string>
#include <vector>

namespace floercone {

inline constexpr const char* version_string = "floercone 0.1.0";

struct CliResult {
    int exit_code = 0;
    std::string out; // stdout payload
    std::string err; // stderr payload (usage/help text, timings)
};

/// Runs one command; args exclude the program name.
CliResult run_cli(const std::vector<std::string>& args);

/// main()-shaped wrapper around run_cli.
int cli_main(int argc, char** argv);

} // namespace floercone
