#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loewner/cli/report.hpp"
#include "loewner/linalg.hpp"

namespace loewner::cli {

struct EnsembleOptions {
  std::string suite;
  int trials = 100;
  Index dim_lo = 2;
  Index dim_hi = 5;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Known suite names, in listing order.
const std::vector<std::string>& suite_names();

/// Runs `trials` seeded instances of a property suite. Trial k draws from
/// make_rng(seed, k), so results do not depend on the thread count.
/// Throws UnknownSuite, or UsageError for bad trial counts or dims.
Report run_ensemble(const EnsembleOptions& opt, const Tolerances& tol);

/// "a-b" or "a" to an inclusive range; UsageError when malformed.
std::pair<Index, Index> parse_dims(const std::string& text);

}  // namespace loewner::cli
