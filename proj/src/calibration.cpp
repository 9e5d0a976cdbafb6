#include "parrondo/calibration.hpp"

#include <cmath>
#include <sstream>

#include "parrondo/classical_evolution.hpp"
#include "parrondo/table.hpp"

namespace parrondo {

std::string describe(const QlgaConventions& c) {
  return "order=" + to_string(c.order) + " init=" + to_string(c.init) +
         " anchor=" + std::to_string(c.residue_anchor);
}

QuantumRun run_quantum_word(const std::string& word,
                            const QlgaConventions& conv, double theta,
                            double slope, double level, std::int64_t t) {
  const auto sched =
      QSchedule::parse(word, QPotential::linear_a(slope),
                       QPotential::ratchet_b(slope, level, conv.residue_anchor));
  return q_evolve(standard_init(conv.init), ScatterAngle{theta}, sched, t,
                  conv.order);
}

CalibrationReport calibrate_phase_order(const CalibrationParams& params) {
  CalibrationReport report;
  report.params = params;

  const auto suite = GameSuite::biased(params.epsilon);
  for (std::size_t g = 0; g < 3; ++g) {
    const auto run = evolve(delta_init(0), suite,
                            FlashSchedule::parse(kClassicalWords[g]), params.t);
    report.classical[g] = run.series.back().expected_payoff;
  }

  for (InitSign init : {InitSign::plus, InitSign::minus}) {
    for (int anchor : {0, 1, 2}) {
      for (PhaseOrder order :
           {PhaseOrder::post, PhaseOrder::pre, PhaseOrder::mid}) {
        CalibrationCandidate cand;
        cand.conventions = {order, init, anchor};
        for (std::size_t g = 0; g < 3; ++g) {
          const auto run =
              run_quantum_word(kQuantumWords[g], cand.conventions,
                               params.theta, params.slope, params.level,
                               params.t);
          cand.payoff[g] = run.series.back().expected_payoff;
          cand.ratio[g] =
              std::abs(cand.payoff[g]) / std::abs(report.classical[g]);
        }
        cand.signs_ok =
            cand.payoff[0] < 0.0 && cand.payoff[1] < 0.0 && cand.payoff[2] > 0.0;
        cand.magnitudes_ok = true;
        for (double r : cand.ratio) {
          cand.magnitudes_ok = cand.magnitudes_ok && r >= params.min_ratio &&
                               r <= params.max_ratio;
        }
        if (!report.selected && cand.signs_ok && cand.magnitudes_ok) {
          report.selected = report.candidates.size();
        }
        report.candidates.push_back(cand);
      }
    }
  }
  return report;
}

std::string CalibrationReport::text() const {
  std::ostringstream os;
  const auto sign = [](double v) { return v < 0.0 ? '-' : v > 0.0 ? '+' : '0'; };
  os << "# quantum convention calibration at t=" << params.t
     << " theta=" << format_number(params.theta) << '\n';
  os << "# target signs (A, B, BAAAA) = (-, -, +); magnitude band ["
     << format_number(params.min_ratio) << ", "
     << format_number(params.max_ratio) << "] x classical\n";
  os << "# classical <x>(" << params.t << ") A=" << format_number(classical[0])
     << " B=" << format_number(classical[1])
     << " AABB=" << format_number(classical[2]) << '\n';
  os << "order,init,anchor,x_A,x_B,x_BAAAA,signs,signs_ok,magnitudes_ok,"
        "selected\n";
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    os << to_string(c.conventions.order) << ','
       << to_string(c.conventions.init) << ',' << c.conventions.residue_anchor
       << ',' << format_number(c.payoff[0]) << ','
       << format_number(c.payoff[1]) << ',' << format_number(c.payoff[2])
       << ',' << sign(c.payoff[0]) << sign(c.payoff[1]) << sign(c.payoff[2])
       << ',' << (c.signs_ok ? "yes" : "no") << ','
       << (c.magnitudes_ok ? "yes" : "no") << ','
       << (selected && *selected == i ? "yes" : "no") << '\n';
  }
  if (selected) {
    os << "# selected: " << describe(candidates[*selected].conventions)
       << '\n';
  } else {
    os << "# selected: none (no candidate reproduces the sign pattern within "
          "the magnitude band)\n";
  }
  return os.str();
}

}  // namespace parrondo
