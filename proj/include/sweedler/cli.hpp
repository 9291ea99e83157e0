#pragma once
// Command-line front end: one subcommand per library operation, JSON
// reports with a fixed field order so identical jobs produce identical
// bytes, and a short text summary.  Exit codes: 0 when the status is ok
// or warn, 1 when violations were found, 2 for input errors.

#include <string>
#include <vector>

namespace sweedler {

struct CliResult {
  std::string json;     // the full report, newline terminated
  std::string summary;  // short human-readable lines
  int exit_code = 0;
};

// args is argv without the program name.
CliResult run_cli(const std::vector<std::string>& args);

// Runs, writes the report to stdout and the summary to stderr.
int cli_main(int argc, char** argv);

}  // namespace sweedler
