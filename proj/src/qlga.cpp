#include "parrondo/qlga.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parrondo {

ScatterCoefficients scatter_coefficients(ScatterAngle angle) {
  return {Amplitude(std::cos(angle.theta), 0.0),
          Amplitude(0.0, std::sin(angle.theta))};
}

std::string to_string(PhaseOrder order) {
  switch (order) {
    case PhaseOrder::pre: return "pre";
    case PhaseOrder::mid: return "mid";
    case PhaseOrder::post: return "post";
  }
  return "post";
}

PhaseOrder parse_phase_order(std::string_view s) {
  if (s == "pre") return PhaseOrder::pre;
  if (s == "mid") return PhaseOrder::mid;
  if (s == "post") return PhaseOrder::post;
  throw std::invalid_argument("phase order must be pre, mid or post");
}

std::string to_string(InitSign sign) {
  return sign == InitSign::plus ? "plus" : "minus";
}

InitSign parse_init_sign(std::string_view s) {
  if (s == "plus" || s == "+" || s == "+1" || s == "1") return InitSign::plus;
  if (s == "minus" || s == "-" || s == "-1") return InitSign::minus;
  throw std::invalid_argument("init sign must be plus or minus");
}

QPotential QPotential::zero() { return QPotential{}; }

QPotential QPotential::linear_a(double slope) {
  QPotential v;
  v.kind_ = Kind::linear_a;
  v.slope_ = slope;
  return v;
}

QPotential QPotential::ratchet_b(double slope, double level,
                                 int residue_anchor) {
  QPotential v;
  v.kind_ = Kind::ratchet_b;
  v.slope_ = slope;
  v.level_ = level;
  v.anchor_ = residue3(residue_anchor);
  return v;
}

QPotential QPotential::with_constant(double c) const {
  QPotential v = *this;
  v.constant_ = c;
  return v;
}

double QPotential::operator()(std::int64_t x) const {
  double v = constant_;
  switch (kind_) {
    case Kind::zero:
      break;
    case Kind::linear_a:
      v += slope_ * static_cast<double>(x);
      break;
    case Kind::ratchet_b:
      v += level_ * (1.0 - 0.5 * residue3(x + anchor_)) +
           slope_ * static_cast<double>(x);
      break;
  }
  return v;
}

QSchedule::QSchedule(std::vector<QPotential> word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("quantum schedule is empty");
}

QSchedule QSchedule::parse(std::string_view word, const QPotential& a,
                           const QPotential& b) {
  std::vector<QPotential> pots;
  for (char c : word) {
    switch (c) {
      case 'A': pots.push_back(a); break;
      case 'B': pots.push_back(b); break;
      case 'Z': pots.push_back(QPotential::zero()); break;
      default:
        throw std::invalid_argument("unknown potential label '" +
                                    std::string(1, c) + "' in schedule");
    }
  }
  return QSchedule(std::move(pots));
}

QState::QState(std::int64_t offset, std::vector<Amplitude> left,
               std::vector<Amplitude> right, std::int64_t time)
    : offset_(offset),
      left_(std::move(left)),
      right_(std::move(right)),
      time_(time) {
  if (left_.empty() || left_.size() != right_.size()) {
    throw std::invalid_argument("amplitude lanes must be equal and nonempty");
  }
}

Amplitude QState::at(std::int64_t x, Direction d) const {
  if (x < min_x() || x > max_x()) return {};
  return lane(d)[static_cast<std::size_t>(x - offset_)];
}

double QState::norm_squared() const {
  double s = 0.0;
  for (std::size_t i = 0; i < left_.size(); ++i) {
    s += std::norm(left_[i]) + std::norm(right_[i]);
  }
  return s;
}

QState standard_init(InitSign sign) {
  const double a = 1.0 / std::sqrt(2.0);
  return QState(0, {Amplitude(a, 0.0)},
                {Amplitude(sign == InitSign::plus ? a : -a, 0.0)}, 0);
}

QState qstep(const QState& state, ScatterAngle angle, const QPotential& pot,
             PhaseOrder order) {
  const std::size_t n = state.size();
  const auto [diag, offdiag] = scatter_coefficients(angle);
  // Phase for every site of the grown window [offset - 1, offset + n].
  const std::int64_t lo = state.offset() - 1;
  std::vector<Amplitude> phase(n + 2);
  for (std::size_t j = 0; j < n + 2; ++j) {
    phase[j] = std::polar(1.0, -pot(lo + static_cast<std::int64_t>(j)));
  }

  const auto& in_l = state.lane(Direction::left);
  const auto& in_r = state.lane(Direction::right);
  std::vector<Amplitude> left(n + 2);
  std::vector<Amplitude> right(n + 2);
  const bool site_phase = order != PhaseOrder::post;
  for (std::size_t i = 0; i < n; ++i) {
    Amplitude l = in_l[i];
    Amplitude r = in_r[i];
    if (site_phase) {
      l *= phase[i + 1];
      r *= phase[i + 1];
    }
    left[i] = diag * l + offdiag * r;
    right[i + 2] = offdiag * l + diag * r;
  }
  if (order == PhaseOrder::post) {
    for (std::size_t j = 0; j < n + 2; ++j) {
      left[j] *= phase[j];
      right[j] *= phase[j];
    }
  }
  return QState(lo, std::move(left), std::move(right), state.time() + 1);
}

QuantumRun q_evolve(const QState& state0, ScatterAngle angle,
                    const QSchedule& sched, std::int64_t t,
                    PhaseOrder order) {
  if (t < 0) throw std::invalid_argument("q_evolve: negative step count");
  QuantumRun run{state0, {}};
  run.series.reserve(static_cast<std::size_t>(t) + 1);
  run.series.push_back({state0.time(), q_expected_payoff(state0)});
  for (std::int64_t k = 0; k < t; ++k) {
    run.final = qstep(run.final, angle, sched.at(run.final.time()), order);
    run.series.push_back({run.final.time(), q_expected_payoff(run.final)});
  }
  return run;
}

PayoffDistribution born_marginal(const QState& state) {
  std::vector<double> w(state.size());
  const auto& l = state.lane(Direction::left);
  const auto& r = state.lane(Direction::right);
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::norm(l[i]) + std::norm(r[i]);
  }
  return PayoffDistribution(state.offset(), std::move(w), state.time());
}

double q_expected_payoff(const QState& state) {
  const auto& l = state.lane(Direction::left);
  const auto& r = state.lane(Direction::right);
  double s = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    s += static_cast<double>(state.offset() + static_cast<std::int64_t>(i)) *
         (std::norm(l[i]) + std::norm(r[i]));
  }
  return s;
}

namespace {

struct FitAtFrequency {
  double amplitude;
  double sse;
};

FitAtFrequency fit_amplitude(std::span<const TimePoint> pts, double freq) {
  double num = 0.0;
  double den = 0.0;
  for (const auto& p : pts) {
    const double g = std::cos(freq * static_cast<double>(p.t)) - 1.0;
    num += g * p.expected_payoff;
    den += g * g;
  }
  const double amp = den > 0.0 ? num / den : 0.0;
  double sse = 0.0;
  for (const auto& p : pts) {
    const double g = std::cos(freq * static_cast<double>(p.t)) - 1.0;
    const double e = p.expected_payoff - amp * g;
    sse += e * e;
  }
  return {amp, sse};
}

}  // namespace

OscillationFit fit_cosine_growth(std::span<const TimePoint> series,
                                 std::int64_t t_max) {
  std::vector<TimePoint> pts;
  for (const auto& p : series) {
    if (p.t <= t_max) pts.push_back(p);
  }
  OscillationFit fit;
  fit.points = pts.size();
  if (pts.size() < 3) return fit;

  constexpr double kLo = 1e-4;
  constexpr double kHi = 0.1;
  constexpr int kGrid = 2000;
  const double ratio = std::log(kHi / kLo) / (kGrid - 1);
  int best = 0;
  double best_sse = fit_amplitude(pts, kLo).sse;
  for (int k = 1; k < kGrid; ++k) {
    const double sse = fit_amplitude(pts, kLo * std::exp(ratio * k)).sse;
    if (sse < best_sse) {
      best_sse = sse;
      best = k;
    }
  }
  // Golden-section refinement between the grid neighbours.
  double a = kLo * std::exp(ratio * std::max(best - 1, 0));
  double b = kLo * std::exp(ratio * std::min(best + 1, kGrid - 1));
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  for (int it = 0; it < 100 && b - a > 1e-15; ++it) {
    if (fit_amplitude(pts, c).sse < fit_amplitude(pts, d).sse) {
      b = d;
    } else {
      a = c;
    }
    c = b - g * (b - a);
    d = a + g * (b - a);
  }
  const double freq = 0.5 * (a + b);
  const auto at = fit_amplitude(pts, freq);
  fit.frequency = freq;
  fit.amplitude = at.amplitude;
  fit.rms_residual = std::sqrt(at.sse / static_cast<double>(pts.size()));
  return fit;
}

}  // namespace parrondo
