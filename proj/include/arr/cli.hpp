#pragma once

#include <string>
#include <vector>

namespace arr::cli {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr int schema_version = 1;

enum ExitCode : int {
  exit_ok = 0,
  exit_input_error = 1,
  exit_hypothesis = 2,
  exit_resource = 3,
  exit_check_failed = 4,
};

struct RunOutput {
  int status = exit_ok;
  std::string out;
  std::string err;
};

/// Runs the tool on argv (argv[0] is the program name). Never throws.
RunOutput run(const std::vector<std::string>& argv);

}  // namespace arr::cli
