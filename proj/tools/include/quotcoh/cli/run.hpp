#pragma once

#include <string>

#include "quotcoh/cli/config.hpp"
#include "quotcoh/cli/report.hpp"

namespace quotcoh::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
/// NotAnIdeal, InvalidSpec, NotALieAlgebra and rejected configs.
inline constexpr int refused = 2;
/// --check found a mismatch.
inline constexpr int check_failed = 3;
} // namespace exit_code

struct RunOptions {
  bool check = false;
};

struct RunResult {
  Report report;
  int exit_code = exit_code::ok;
  std::string diagnostic;
};

/// Dispatches to the Lie, torus or witness pipeline. Never throws: failures
/// are turned into exit codes with a diagnostic.
RunResult run(const JobConfig &job, const RunOptions &options = {});

} // namespace quotcoh::cli
