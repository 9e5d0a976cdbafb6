#pragma once

#include <cstdint>

#include "parrondo/classical_evolution.hpp"

namespace parrondo {

struct RunConfig {
  std::uint64_t seed = 0;
  std::int64_t runs = 1;
  std::int64_t steps = 0;
  GameSuite suite;
  FlashSchedule schedule = FlashSchedule::parse("A");

  void validate() const;
};

struct SampleStats {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t runs = 0;
  // Set when runs == 1; std_error is then reported as 0.
  bool degenerate = false;
};

// Uniform draw for (seed, run, step); the same triple always gives the same
// value.
double coin_uniform(std::uint64_t seed, std::int64_t run_index,
                    std::int64_t step);

// Final payoff of one trajectory from x = 0. Heads iff u < heads probability.
std::int64_t sample_trajectory(const RunConfig& cfg, std::int64_t run_index);

// Trajectories may run on several threads; aggregation is always in run-index
// order, so the result does not depend on `threads`. 0 picks the hardware
// concurrency.
SampleStats estimate_expected_payoff(const RunConfig& cfg,
                                     unsigned threads = 0);

}  // namespace parrondo
