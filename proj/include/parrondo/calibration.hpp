#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parrondo/qlga.hpp"

namespace parrondo {

// Quantum-walk choices the model leaves open: where the phase sits in a
// step, the relative sign of the initial amplitudes, and which residue the
// ratchet period starts on.
struct QlgaConventions {
  PhaseOrder order = PhaseOrder::post;
  InitSign init = InitSign::plus;
  int residue_anchor = 0;

  bool operator==(const QlgaConventions&) const = default;
};

std::string describe(const QlgaConventions& c);

struct CalibrationParams {
  double theta = std::numbers::pi / 4.0;
  double slope = QPotential::kDefaultSlope;
  double level = QPotential::kDefaultLevel;
  std::int64_t t = 100;
  // Classical reference games: pa = 1/2 - eps, p0 = 1/10 - eps, p1 = 3/4 - eps.
  double epsilon = 0.005;
  // Accepted |quantum / classical| band for each game at time t.
  double min_ratio = 0.2;
  double max_ratio = 5.0;
};

// Schedules in report order. The classical counterpart of BAAAA is AABB.
inline constexpr std::array<const char*, 3> kQuantumWords{"A", "B", "BAAAA"};
inline constexpr std::array<const char*, 3> kClassicalWords{"A", "B", "AABB"};

struct CalibrationCandidate {
  QlgaConventions conventions;
  std::array<double, 3> payoff{};  // <x>(t) for A, B, BAAAA
  std::array<double, 3> ratio{};   // |quantum| / |classical|
  bool signs_ok = false;           // (-, -, +)
  bool magnitudes_ok = false;
};

struct CalibrationReport {
  CalibrationParams params;
  std::array<double, 3> classical{};
  // Preference order: default conventions first.
  std::vector<CalibrationCandidate> candidates;
  std::optional<std::size_t> selected;

  const QlgaConventions* selected_conventions() const {
    return selected ? &candidates[*selected].conventions : nullptr;
  }
  std::string text() const;
};

// Evaluates every convention combination on the three quantum schedules and
// selects the first (in preference order) whose signs are (-, -, +) and whose
// magnitudes fall inside the ratio band. No selection is a reported outcome,
// not an error.
CalibrationReport calibrate_phase_order(const CalibrationParams& params = {});

// <x>(t) for one quantum schedule word under the given conventions.
QuantumRun run_quantum_word(const std::string& word,
                            const QlgaConventions& conv, double theta,
                            double slope, double level, std::int64_t t);

}  // namespace parrondo
