#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lr/json_io.hpp"
#include "lr/parallel.hpp"

namespace lr {

struct AcceptanceConfig {
  std::uint64_t seed = 1;
  unsigned threads = default_threads();
  bool stretch = false;  // also run the non-blocking n = 7 orbit count
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string summary;  // one line, printed by the acceptance runner
  Json details;         // counts, failures with certificates, timings
  double seconds = 0;
};

inline constexpr int kCriterionCount = 9;

/// Runs criterion id in [1, 9]. Library errors are caught and reported as a
/// failed criterion; each criterion draws from split(id) of the root seed.
CriterionResult run_criterion(int id, const AcceptanceConfig& config);

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config);

/// Timing is left out unless asked for so that reports are reproducible.
Json to_json(const CriterionResult& r, bool with_timing = false);

}  // namespace lr
