#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wallach {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the nine verification criteria. `seed` drives the randomized property
/// checks so failures are reproducible.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 12345);

bool all_pass(const std::vector<CriterionResult>& results);

/// One "[PASS]/[FAIL] criterion N: ..." line per entry.
std::string format_results(const std::vector<CriterionResult>& results);

}  // namespace wallach
