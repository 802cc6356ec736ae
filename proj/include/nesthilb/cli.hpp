#pragma once

#include "nesthilb/engine.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace nesthilb::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInconsistent = 3 };

/// Runs `nesthilb <args...>` (args exclude the program name) and returns the
/// exit code. All output goes to the given streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Names accepted by `verify`.
const std::vector<std::string>& suite_names();
int default_suite_cap(const std::string& suite);

/// Runs one suite, printing a PASS/FAIL line per check. The first failure is
/// printed in full. Throws std::invalid_argument on an unknown suite.
bool run_suite(const std::string& suite, int cap, const EngineOptions& opts, std::ostream& out);

}  // namespace nesthilb::cli
