#include "parrondo/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "parrondo/philox.hpp"

namespace parrondo {

void RunConfig::validate() const {
  if (runs < 1) throw std::invalid_argument("runs must be at least 1");
  if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
  suite.validate();
}

double coin_uniform(std::uint64_t seed, std::int64_t run_index,
                    std::int64_t step) {
  const auto run = static_cast<std::uint64_t>(run_index);
  const auto s = static_cast<std::uint64_t>(step);
  const Philox4x32::Counter ctr{static_cast<std::uint32_t>(s),
                                static_cast<std::uint32_t>(run),
                                static_cast<std::uint32_t>(run >> 32),
                                static_cast<std::uint32_t>(s >> 32)};
  const Philox4x32::Key key{static_cast<std::uint32_t>(seed),
                            static_cast<std::uint32_t>(seed >> 32)};
  const auto out = Philox4x32::bijection(ctr, key);
  return to_unit_double(out[0], out[1]);
}

std::int64_t sample_trajectory(const RunConfig& cfg, std::int64_t run_index) {
  if (run_index < 0 || run_index >= cfg.runs) {
    throw std::out_of_range("run index outside [0, runs)");
  }
  std::int64_t x = 0;
  for (std::int64_t s = 0; s < cfg.steps; ++s) {
    double q;
    if (cfg.schedule.at(s) == GameLabel::A) {
      q = cfg.suite.a.pa;
    } else {
      q = residue3(x) == 0 ? cfg.suite.b.p0 : cfg.suite.b.p1;
    }
    x += coin_uniform(cfg.seed, run_index, s) < q ? 1 : -1;
  }
  return x;
}

SampleStats estimate_expected_payoff(const RunConfig& cfg, unsigned threads) {
  cfg.validate();
  const auto n = static_cast<std::size_t>(cfg.runs);
  std::vector<std::int64_t> finals(n);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, n / 1024)));
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&cfg, &finals, begin, end] {
        for (std::size_t i = begin; i < end; ++i) {
          finals[i] = sample_trajectory(cfg, static_cast<std::int64_t>(i));
        }
      });
    }
  }

  // Final payoffs are integers bounded by `steps`, so these sums are exact
  // in 64-bit integers.
  std::int64_t sum = 0;
  for (auto x : finals) sum += x;
  const double mean = static_cast<double>(sum) / static_cast<double>(n);

  SampleStats stats;
  stats.mean = mean;
  stats.runs = cfg.runs;
  if (n == 1) {
    stats.degenerate = true;
    return stats;
  }
  double ss = 0.0;
  for (auto x : finals) {
    const double d = static_cast<double>(x) - mean;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  stats.std_error = sd / std::sqrt(static_cast<double>(n));
  return stats;
}

}  // namespace parrondo
