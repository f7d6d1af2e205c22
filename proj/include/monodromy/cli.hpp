#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monodromy {

inline constexpr const char* kToolVersion = "0.3.0";

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitInternal = 2,
};

/// Runs one CLI invocation. `args` excludes the program name. The report goes
/// to `out` (text table or JSON document), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

}  // namespace monodromy
