#include "parrondo/correlated_walk.hpp"

#include <stdexcept>

namespace parrondo {

ScatterProb::ScatterProb(double p_left, double p_right)
    : p_left_(p_left), p_right_(p_right) {
  if (!(p_left >= 0.0 && p_left <= 1.0 && p_right >= 0.0 && p_right <= 1.0)) {
    throw std::invalid_argument("scatter probability outside [0, 1]");
  }
}

LgaDensity::LgaDensity(std::int64_t offset, std::vector<double> left,
                       std::vector<double> right, std::int64_t time)
    : offset_(offset),
      left_(std::move(left)),
      right_(std::move(right)),
      time_(time) {
  if (left_.empty() || left_.size() != right_.size()) {
    throw std::invalid_argument("lattice gas lanes must be equal and nonempty");
  }
}

LgaDensity LgaDensity::delta(std::int64_t x, Direction d) {
  return d == Direction::left ? LgaDensity(x, {1.0}, {0.0})
                              : LgaDensity(x, {0.0}, {1.0});
}

LgaDensity LgaDensity::symmetric_delta(std::int64_t x) {
  return LgaDensity(x, {0.5}, {0.5});
}

double LgaDensity::at(std::int64_t x, Direction d) const {
  if (x < min_x() || x > max_x()) return 0.0;
  return lane(d)[static_cast<std::size_t>(x - offset_)];
}

double LgaDensity::total() const {
  double s = 0.0;
  for (std::size_t i = 0; i < left_.size(); ++i) s += left_[i] + right_[i];
  return s;
}

LgaDensity crw_step(const LgaDensity& state, const ScatterProb& sp) {
  const std::size_t n = state.size();
  std::vector<double> left(n + 2, 0.0);
  std::vector<double> right(n + 2, 0.0);
  const double keep_l = sp.keep(Direction::left);
  const double keep_r = sp.keep(Direction::right);
  const auto& in_l = state.lane(Direction::left);
  const auto& in_r = state.lane(Direction::right);
  // Old cell i sits at new cell i + 1; left movers land on i, right on i + 2.
  for (std::size_t i = 0; i < n; ++i) {
    left[i] += keep_l * in_l[i] + (1.0 - keep_r) * in_r[i];
    right[i + 2] += keep_r * in_r[i] + (1.0 - keep_l) * in_l[i];
  }
  return LgaDensity(state.offset() - 1, std::move(left), std::move(right),
                    state.time() + 1);
}

LgaDensity crw_evolve(LgaDensity state, const ScatterProb& sp,
                      std::int64_t t) {
  for (std::int64_t k = 0; k < t; ++k) state = crw_step(state, sp);
  return state;
}

PayoffDistribution site_marginal(const LgaDensity& state) {
  std::vector<double> w(state.size());
  const auto& l = state.lane(Direction::left);
  const auto& r = state.lane(Direction::right);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = l[i] + r[i];
  return PayoffDistribution(state.offset(), std::move(w), state.time());
}

Moments crw_moments(const LgaDensity& state) {
  const auto marginal = site_marginal(state);
  return {expected_payoff(marginal), variance(marginal)};
}

}  // namespace parrondo
