#pragma once

#include <string>
#include <vector>

namespace minkin::cli {

struct CommandResult {
  int exit_code = 0;   // 0 success, 1 domain error, 2 usage error
  std::string out;     // payload (JSON or text per --format)
  std::string err;     // diagnostics and usage text
};

// argv without the program name.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace minkin::cli
