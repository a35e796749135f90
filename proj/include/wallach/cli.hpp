#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wallach {

/// Parsed command-line configuration.
struct RunConfig {
  std::string command;
  std::string family;
  std::vector<int> int_params;
  std::string format = "table";  // "json" | "table" | "csv"
  int threads = 0;               // 0: leave the runtime default
  std::uint64_t seed = 12345;
  double identity_tol = 1e-8;
  int grid = 256;
  int segment_samples = 4096;
};

/// Runs one CLI invocation. Returns 0 on success, 1 on verification failure,
/// 2 on input errors (usage goes to `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wallach
