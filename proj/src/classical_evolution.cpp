#include "parrondo/classical_evolution.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace parrondo {

PayoffDistribution::PayoffDistribution(std::int64_t offset,
                                       std::vector<double> weights,
                                       std::int64_t time)
    : offset_(offset), weights_(std::move(weights)), time_(time) {
  if (weights_.empty()) {
    throw std::invalid_argument("payoff distribution window is empty");
  }
  for (double w : weights_) {
    if (!(w >= 0.0)) {
      throw std::invalid_argument("payoff distribution weight is negative");
    }
  }
}

double PayoffDistribution::at(std::int64_t x) const {
  if (x < min_x() || x > max_x()) return 0.0;
  return weights_[static_cast<std::size_t>(x - offset_)];
}

double PayoffDistribution::total() const {
  double s = 0.0;
  for (double w : weights_) s += w;
  return s;
}

FlashSchedule::FlashSchedule(std::vector<GameLabel> word)
    : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("flash schedule is empty");
}

FlashSchedule FlashSchedule::parse(std::string_view word) {
  std::vector<GameLabel> labels;
  for (char c : word) {
    switch (c) {
      case 'A': labels.push_back(GameLabel::A); break;
      case 'B': labels.push_back(GameLabel::B); break;
      default:
        throw std::invalid_argument("unknown game label '" +
                                    std::string(1, c) + "' in schedule");
    }
  }
  return FlashSchedule(std::move(labels));
}

std::string FlashSchedule::str() const {
  std::string s;
  for (GameLabel g : word_) s += g == GameLabel::A ? 'A' : 'B';
  return s;
}

void GameSuite::validate() const {
  a.validate();
  b.validate();
}

GameSuite GameSuite::biased(double epsilon) {
  const BiasOffset bias{epsilon};
  return GameSuite{bias.apply(GameAParams{0.5}),
                   bias.apply(GameBParams{0.1, 0.75})};
}

PayoffDistribution delta_init(std::int64_t x0) {
  return PayoffDistribution(x0, {1.0}, 0);
}

PayoffDistribution step(const PayoffDistribution& dist, const GameSuite& suite,
                        GameLabel label) {
  const auto& w = dist.weights();
  std::vector<double> next(w.size() + 2, 0.0);
  // Cell i of `w` (payoff offset + i) lands on cells i and i + 2 of `next`.
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double m = w[i];
    if (m == 0.0) continue;
    double q;
    if (label == GameLabel::A) {
      q = suite.a.pa;
    } else {
      const auto x = dist.offset() + static_cast<std::int64_t>(i);
      q = residue3(x) == 0 ? suite.b.p0 : suite.b.p1;
    }
    // m - up rather than (1 - q) * m: fl(q) + fl(1 - q) need not be 1, and
    // that bias compounds into a mass drift over long runs.
    const double up = q * m;
    next[i + 2] += up;
    next[i] += m - up;
  }
  return PayoffDistribution(dist.offset() - 1, std::move(next),
                            dist.time() + 1);
}

ClassicalRun evolve(const PayoffDistribution& dist0, const GameSuite& suite,
                    const FlashSchedule& sched, std::int64_t t) {
  if (t < 0) throw std::invalid_argument("evolve: negative step count");
  suite.validate();
  ClassicalRun run{dist0, {}};
  run.series.reserve(static_cast<std::size_t>(t) + 1);
  run.series.push_back({dist0.time(), expected_payoff(dist0)});
  for (std::int64_t k = 0; k < t; ++k) {
    run.final = step(run.final, suite, sched.at(run.final.time()));
    run.series.push_back({run.final.time(), expected_payoff(run.final)});
  }
  return run;
}

double expected_payoff(const PayoffDistribution& dist) {
  // Mirror-paired terms: a symmetric distribution gives exactly 0.
  const std::int64_t reach =
      std::max(std::abs(dist.min_x()), std::abs(dist.max_x()));
  double s = 0.0;
  for (std::int64_t x = 1; x <= reach; ++x) {
    s += static_cast<double>(x) * (dist.at(x) - dist.at(-x));
  }
  return s;
}

double variance(const PayoffDistribution& dist) {
  // Centered two-pass form; the raw-moment difference loses digits at large t.
  const double mean = expected_payoff(dist);
  double s = 0.0;
  const auto& w = dist.weights();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double d =
        static_cast<double>(dist.offset() + static_cast<std::int64_t>(i)) -
        mean;
    s += d * d * w[i];
  }
  return s;
}

PayoffDistribution parity_smooth(const PayoffDistribution& prev,
                                 const PayoffDistribution& cur,
                                 const PayoffDistribution& next) {
  if (prev.time() + 1 != cur.time() || cur.time() + 1 != next.time()) {
    throw std::invalid_argument(
        "parity_smooth needs consecutive times, got " +
        std::to_string(prev.time()) + ", " + std::to_string(cur.time()) +
        ", " + std::to_string(next.time()));
  }
  const auto lo = std::min({prev.min_x(), cur.min_x(), next.min_x()});
  const auto hi = std::max({prev.max_x(), cur.max_x(), next.max_x()});
  std::vector<double> w(static_cast<std::size_t>(hi - lo + 1));
  for (auto x = lo; x <= hi; ++x) {
    w[static_cast<std::size_t>(x - lo)] =
        0.25 * (prev.at(x) + 2.0 * cur.at(x) + next.at(x));
  }
  return PayoffDistribution(lo, std::move(w), cur.time());
}

}  // namespace parrondo
