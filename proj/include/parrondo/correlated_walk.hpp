#pragma once

#include <cstdint>
#include <vector>

#include "parrondo/classical_evolution.hpp"

namespace parrondo {

// Direction bit of a lattice-gas particle.
enum class Direction : int { left = -1, right = +1 };

constexpr int sign(Direction d) { return static_cast<int>(d); }
constexpr Direction reverse(Direction d) {
  return d == Direction::left ? Direction::right : Direction::left;
}

// Probability of keeping the incoming direction during scattering. The
// symmetric form uses one p for both directions; the asymmetric form gives a
// biased walk.
class ScatterProb {
 public:
  explicit ScatterProb(double p) : ScatterProb(p, p) {}
  static ScatterProb asymmetric(double p_left, double p_right) {
    return ScatterProb(p_left, p_right);
  }

  double keep(Direction incoming) const {
    return incoming == Direction::left ? p_left_ : p_right_;
  }
  bool symmetric() const { return p_left_ == p_right_; }

 private:
  ScatterProb(double p_left, double p_right);

  double p_left_;
  double p_right_;
};

// Probability over (site, direction) for the probabilistic lattice gas.
class LgaDensity {
 public:
  LgaDensity(std::int64_t offset, std::vector<double> left,
             std::vector<double> right, std::int64_t time = 0);

  static LgaDensity delta(std::int64_t x, Direction d);
  // Mass 1/2 on each direction at site x.
  static LgaDensity symmetric_delta(std::int64_t x);

  std::int64_t offset() const { return offset_; }
  std::int64_t min_x() const { return offset_; }
  std::int64_t max_x() const {
    return offset_ + static_cast<std::int64_t>(left_.size()) - 1;
  }
  std::int64_t time() const { return time_; }
  std::size_t size() const { return left_.size(); }
  const std::vector<double>& lane(Direction d) const {
    return d == Direction::left ? left_ : right_;
  }

  double at(std::int64_t x, Direction d) const;
  double total() const;

 private:
  std::int64_t offset_;
  std::vector<double> left_;
  std::vector<double> right_;
  std::int64_t time_;
};

// Scatter then advect: mass m at (x, a) moves p*m to (x+a, a) and (1-p)*m to
// (x-a, -a), where p = sp.keep(a).
LgaDensity crw_step(const LgaDensity& state, const ScatterProb& sp);

LgaDensity crw_evolve(LgaDensity state, const ScatterProb& sp, std::int64_t t);

PayoffDistribution site_marginal(const LgaDensity& state);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

Moments crw_moments(const LgaDensity& state);

}  // namespace parrondo
