#pragma once

// Minimal subprocess capture for driving the CLI from tests.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace testproc {

struct Result {
  int exit_code;
  std::string out;
};

/// Runs `command` through the shell, capturing stdout. stderr is folded
/// into stdout so diagnostics show up in failure logs.
inline Result run(const std::string& command) {
  std::string wrapped = command + " 2>&1";
  FILE* pipe = popen(wrapped.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    out.append(buffer.data(), n);
  }
  int status = pclose(pipe);
  int exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {exit_code, std::move(out)};
}

}  // namespace testproc
