#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "parrondo/game_analysis.hpp"

namespace parrondo {

// Probability weights over a contiguous integer payoff window.
class PayoffDistribution {
 public:
  PayoffDistribution() = default;
  PayoffDistribution(std::int64_t offset, std::vector<double> weights,
                     std::int64_t time = 0);

  std::int64_t offset() const { return offset_; }
  std::int64_t min_x() const { return offset_; }
  std::int64_t max_x() const {
    return offset_ + static_cast<std::int64_t>(weights_.size()) - 1;
  }
  std::int64_t time() const { return time_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }

  // Weight at payoff x; zero outside the window.
  double at(std::int64_t x) const;
  double total() const;

 private:
  std::int64_t offset_ = 0;
  std::vector<double> weights_{1.0};
  std::int64_t time_ = 0;
};

enum class GameLabel { A, B };

// Cyclic word of game labels.
class FlashSchedule {
 public:
  explicit FlashSchedule(std::vector<GameLabel> word);
  // Parses a word such as "AABB". Throws std::invalid_argument on other
  // characters or an empty word.
  static FlashSchedule parse(std::string_view word);

  GameLabel at(std::int64_t t) const {
    return word_[static_cast<std::size_t>(t % static_cast<std::int64_t>(
        word_.size()))];
  }
  const std::vector<GameLabel>& word() const { return word_; }
  std::string str() const;

 private:
  std::vector<GameLabel> word_;
};

struct GameSuite {
  GameAParams a;
  GameBParams b;

  void validate() const;
  // pa = 1/2 - eps, p0 = 1/10 - eps, p1 = 3/4 - eps.
  static GameSuite biased(double epsilon);
};

struct TimePoint {
  std::int64_t t = 0;
  double expected_payoff = 0.0;
};

struct ClassicalRun {
  PayoffDistribution final;
  std::vector<TimePoint> series;
};

PayoffDistribution delta_init(std::int64_t x0);

// One play. Game B reads the payoff before the flip to pick its coin.
PayoffDistribution step(const PayoffDistribution& dist, const GameSuite& suite,
                        GameLabel label);

// `t` plays. The label for the play leaving time s is sched.at(s), so a
// continued evolution keeps its place in the word.
ClassicalRun evolve(const PayoffDistribution& dist0, const GameSuite& suite,
                    const FlashSchedule& sched, std::int64_t t);

double expected_payoff(const PayoffDistribution& dist);
double variance(const PayoffDistribution& dist);

// [p(x,t-1) + 2 p(x,t) + p(x,t+1)] / 4 on the union window. Removes the
// alternating-parity artifact of single-step lattice dynamics for display.
// Throws std::invalid_argument unless the time stamps are consecutive.
PayoffDistribution parity_smooth(const PayoffDistribution& prev,
                                 const PayoffDistribution& cur,
                                 const PayoffDistribution& next);

}  // namespace parrondo
