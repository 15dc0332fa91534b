#pragma once

// Helper for driving the sspec binary from tests: runs a command line and
// captures exit code plus standard output (stderr folded in).

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace testutil {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

inline CliResult run_command(const std::string& command) {
  CliResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline CliResult run_cli(const std::string& args) {
  return run_command(std::string(SSPEC_CLI_PATH) + " " + args);
}

inline std::string data_file(const std::string& name) {
  return std::string(SSPEC_DATA_DIR) + "/" + name;
}

}  // namespace testutil
