#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parrondo/classical_evolution.hpp"
#include "parrondo/correlated_walk.hpp"

namespace parrondo {

using Amplitude = std::complex<double>;

struct ScatterAngle {
  double theta = std::numbers::pi / 4.0;
};

// The unitary scattering matrix [[diag, offdiag], [offdiag, diag]].
struct ScatterCoefficients {
  Amplitude diag;
  Amplitude offdiag;
};

ScatterCoefficients scatter_coefficients(ScatterAngle angle);

// Where the potential phase e^{-iV(x)} is applied within a timestep:
// before scattering, between scattering and advection, or after advection
// (at the arrival site). `pre` and `mid` coincide because both the phase and
// the scattering act site by site.
enum class PhaseOrder { pre, mid, post };

std::string to_string(PhaseOrder order);
PhaseOrder parse_phase_order(std::string_view s);

// Relative sign of the two initial amplitudes.
enum class InitSign { plus, minus };

std::string to_string(InitSign sign);
InitSign parse_init_sign(std::string_view s);

// Site potential for the quantum walk.
//   linear_a:  V(x) = slope * x
//   ratchet_b: V(x) = level * [1 - ((x + anchor) mod 3) / 2] + slope * x
// Every kind adds `constant`, which only changes a global phase.
class QPotential {
 public:
  enum class Kind { zero, linear_a, ratchet_b };

  static constexpr double kDefaultSlope = 2.0 * std::numbers::pi / 5000.0;
  static constexpr double kDefaultLevel = std::numbers::pi / 3.0;

  static QPotential zero();
  static QPotential linear_a(double slope = kDefaultSlope);
  static QPotential ratchet_b(double slope = kDefaultSlope,
                              double level = kDefaultLevel,
                              int residue_anchor = 0);

  QPotential with_constant(double c) const;

  Kind kind() const { return kind_; }
  double slope() const { return slope_; }
  double level() const { return level_; }
  int residue_anchor() const { return anchor_; }

  double operator()(std::int64_t x) const;

 private:
  Kind kind_ = Kind::zero;
  double slope_ = 0.0;
  double level_ = 0.0;
  int anchor_ = 0;
  double constant_ = 0.0;
};

// Cyclic word of potentials, one per timestep.
class QSchedule {
 public:
  explicit QSchedule(std::vector<QPotential> word);
  // Letters: A -> `a`, B -> `b`, Z -> zero potential.
  static QSchedule parse(std::string_view word, const QPotential& a,
                         const QPotential& b);

  const QPotential& at(std::int64_t t) const {
    return word_[static_cast<std::size_t>(
        t % static_cast<std::int64_t>(word_.size()))];
  }
  std::size_t length() const { return word_.size(); }

 private:
  std::vector<QPotential> word_;
};

// Amplitudes over (site, direction), stored as two direction lanes.
class QState {
 public:
  QState(std::int64_t offset, std::vector<Amplitude> left,
         std::vector<Amplitude> right, std::int64_t time = 0);

  std::int64_t offset() const { return offset_; }
  std::int64_t min_x() const { return offset_; }
  std::int64_t max_x() const {
    return offset_ + static_cast<std::int64_t>(left_.size()) - 1;
  }
  std::int64_t time() const { return time_; }
  std::size_t size() const { return left_.size(); }
  const std::vector<Amplitude>& lane(Direction d) const {
    return d == Direction::left ? left_ : right_;
  }

  Amplitude at(std::int64_t x, Direction d) const;
  double norm_squared() const;

 private:
  std::int64_t offset_;
  std::vector<Amplitude> left_;
  std::vector<Amplitude> right_;
  std::int64_t time_;
};

// (|0,-1> +/- |0,+1>) / sqrt(2) at time 0.
QState standard_init(InitSign sign = InitSign::plus);

// Scatter |x,a> -> cos(theta)|x,a> + i sin(theta)|x,-a>, advect
// |x,a> -> |x+a,a>, and multiply by e^{-iV(x)} at the point given by `order`.
QState qstep(const QState& state, ScatterAngle angle, const QPotential& pot,
             PhaseOrder order = PhaseOrder::post);

struct QuantumRun {
  QState final;
  std::vector<TimePoint> series;
};

QuantumRun q_evolve(const QState& state0, ScatterAngle angle,
                    const QSchedule& sched, std::int64_t t,
                    PhaseOrder order = PhaseOrder::post);

PayoffDistribution born_marginal(const QState& state);
double q_expected_payoff(const QState& state);

// Least-squares fit of <x>(t) ~ amplitude * (cos(frequency * t) - 1) over the
// points with t <= t_max.
struct OscillationFit {
  double amplitude = 0.0;
  double frequency = 0.0;
  double rms_residual = 0.0;
  std::size_t points = 0;
};

OscillationFit fit_cosine_growth(std::span<const TimePoint> series,
                                 std::int64_t t_max);

}  // namespace parrondo
