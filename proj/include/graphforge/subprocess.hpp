#pragma once

#include <string>

namespace graphforge {

struct RunResult {
  int exit_code = -1;
  bool timed_out = false;
  bool spawn_failed = false;
  std::string out;
  std::string err;
};

// Runs `command` through /bin/sh -c with `input` on stdin, capturing stdout
// and stderr, killing the child after timeout_ms.
RunResult run_command(const std::string& command, const std::string& input, int timeout_ms);

}  // namespace graphforge
