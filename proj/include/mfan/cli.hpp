#pragma once

#include <string>
#include <vector>

namespace mfan::cli {

struct RunResult {
  int exit_code = 0;
  std::string output;
};

/// Runs one command line (without the program name) and captures the report.
/// Exit codes: 0 success, 1 parse/schema error, 2 validation failure,
/// 3 not polytopal, 4 oracle disagreement.
RunResult run(const std::vector<std::string>& args);

}  // namespace mfan::cli
