// Command-line front end. Every command prints one canonical JSON object
// {"status": ..., "result": ...} on standard output.

#ifndef HESSE_MOORE_TOOLS_CLI_HPP_
#define HESSE_MOORE_TOOLS_CLI_HPP_

#include <string>
#include <vector>

namespace hesse_moore::cli {

enum ExitCode { ok = 0, domain_error = 1, usage_error = 2 };

struct CommandResult {
  int exit_code = ok;
  std::string out; // JSON line, or help text
  std::string err; // usage text and parse errors
};

// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

} // namespace hesse_moore::cli

#endif
