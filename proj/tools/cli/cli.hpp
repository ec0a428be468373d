#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace shortcut::cli {

enum ExitCode : int { ok = 0, violation = 1, usage = 2, budget = 3 };

struct RunResult {
  int exit_code = ok;
  // Full report; empty for --help and for usage errors. The "timing" member
  // is the only part that varies between identical runs.
  nlohmann::ordered_json report;
  std::string out;  // what goes to stdout
  std::string err;  // what goes to stderr
};

/// Runs one shortcut-lab command line (without the program name). Never
/// throws; every failure is mapped to an exit code.
RunResult run(const std::vector<std::string>& args);

}  // namespace shortcut::cli
