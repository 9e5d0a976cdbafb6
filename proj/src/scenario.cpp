#include "parrondo/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <set>
#include <sstream>

#include "parrondo/calibration.hpp"
#include "parrondo/classical_evolution.hpp"
#include "parrondo/correlated_walk.hpp"
#include "parrondo/montecarlo.hpp"
#include "parrondo/philox.hpp"

namespace parrondo {
namespace {

enum class Family { classical, quantum, crw };

struct PresetDef {
  std::string name;
  Family family;
};

const std::vector<PresetDef>& preset_defs() {
  static const std::vector<PresetDef> defs{
      {"figure1", Family::classical}, {"figure2", Family::classical},
      {"figure3", Family::classical}, {"figure4", Family::classical},
      {"figure6", Family::quantum},   {"figure7", Family::quantum},
      {"figure8", Family::quantum},   {"figure9", Family::quantum},
      {"figure10", Family::quantum},  {"crw-demo", Family::crw},
  };
  return defs;
}

std::vector<std::string> family_keys(Family f) {
  switch (f) {
    case Family::classical:
      return {"epsilon", "pa", "p0", "p1", "t", "schedule", "mc_runs"};
    case Family::quantum:
      return {"theta",     "slope",          "level",       "t",
              "schedule",  "init_sign",      "residue_anchor",
              "phase_order", "epsilon",      "fit_t_max"};
    case Family::crw:
      return {"p_values", "t", "start"};
  }
  return {};
}

// Typed access to overrides with a fixed key set.
class Params {
 public:
  Params(const Overrides& o, Family f) : o_(o) {
    const auto keys = family_keys(f);
    for (const auto& [k, v] : o) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
        throw UnknownOverrideKey("unknown override key '" + k + "'");
      }
    }
  }

  bool has(const std::string& key) const { return o_.count(key) != 0; }

  double real(const std::string& key, double fallback) const {
    const auto it = o_.find(key);
    if (it == o_.end()) return fallback;
    return parse_real(key, it->second);
  }

  std::int64_t integer(const std::string& key, std::int64_t fallback) const {
    const auto it = o_.find(key);
    if (it == o_.end()) return fallback;
    std::int64_t v = 0;
    const auto& s = it->second;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::invalid_argument("override " + key + "='" + s +
                                  "' is not an integer");
    }
    return v;
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    const auto it = o_.find(key);
    return it == o_.end() ? fallback : it->second;
  }

  static double parse_real(const std::string& key, const std::string& s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
      throw std::invalid_argument("override " + key + "='" + s +
                                  "' is not a finite number");
    }
    return v;
  }

 private:
  const Overrides& o_;
};

std::string join_overrides(const Overrides& o) {
  std::string s;
  for (const auto& [k, v] : o) {
    if (!s.empty()) s += ';';
    s += k + '=' + v;
  }
  return s;
}

OutputTable base_table(OutputTable::Kind kind, const std::string& preset,
                       const std::string& series, const Overrides& o,
                       const RunOptions& opt) {
  OutputTable t;
  t.kind = kind;
  t.add_meta("preset", preset);
  t.add_meta("series", series);
  t.add_meta("version", kToolVersion);
  t.add_meta("overrides", join_overrides(o));
  t.add_meta("seed", std::to_string(opt.seed));
  if (!opt.command.empty()) t.add_meta("command", opt.command);
  if (kind == OutputTable::Kind::timeseries) {
    t.columns = {"t", "expected_payoff"};
  } else {
    t.columns = {"x", "probability"};
  }
  return t;
}

void fill_series(OutputTable& t, const std::vector<TimePoint>& series) {
  t.rows.reserve(series.size());
  for (const auto& p : series) {
    t.rows.push_back({static_cast<double>(p.t), p.expected_payoff});
  }
}

std::int64_t positive_steps(const Params& p, std::int64_t fallback) {
  const auto t = p.integer("t", fallback);
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  return t;
}

// ---------------------------------------------------------------- classical

struct ClassicalSetup {
  GameSuite suite;
  double epsilon;
  std::int64_t t;
  std::string schedule;
};

ClassicalSetup classical_setup(const Params& p) {
  ClassicalSetup s;
  s.epsilon = p.real("epsilon", 0.005);
  s.suite = GameSuite::biased(s.epsilon);
  s.suite.a.pa = p.real("pa", s.suite.a.pa);
  s.suite.b.p0 = p.real("p0", s.suite.b.p0);
  s.suite.b.p1 = p.real("p1", s.suite.b.p1);
  s.suite.validate();
  s.t = positive_steps(p, 100);
  s.schedule = p.text("schedule", "AABB");
  FlashSchedule::parse(s.schedule);
  return s;
}

void add_suite_meta(OutputTable& t, const ClassicalSetup& s) {
  t.add_meta("epsilon", format_number(s.epsilon));
  t.add_meta("pa", format_number(s.suite.a.pa));
  t.add_meta("p0", format_number(s.suite.b.p0));
  t.add_meta("p1", format_number(s.suite.b.p1));
  t.add_meta("steps", std::to_string(s.t));
  t.add_meta("phase_order", "n/a");
}

std::vector<NamedTable> run_figure1(const std::string& preset, const Params& p,
                                    const Overrides& o, const RunOptions& opt) {
  const auto s = classical_setup(p);
  const auto mc_runs = p.integer("mc_runs", 0);
  if (mc_runs < 0) throw std::invalid_argument("mc_runs must be >= 0");
  std::vector<NamedTable> out;
  for (const std::string& word : {std::string("A"), std::string("B"),
                                 s.schedule}) {
    const auto sched = FlashSchedule::parse(word);
    const auto run = evolve(delta_init(0), s.suite, sched, s.t);
    auto table =
        base_table(OutputTable::Kind::timeseries, preset, word, o, opt);
    add_suite_meta(table, s);
    table.add_meta("schedule", word);
    if (mc_runs > 0) {
      RunConfig cfg{opt.seed, mc_runs, s.t, s.suite, sched};
      const auto stats = estimate_expected_payoff(cfg);
      table.add_meta("mc_rng", Philox4x32::kName);
      table.add_meta("mc_runs", std::to_string(mc_runs));
      table.add_meta("mc_mean", format_number(stats.mean));
      table.add_meta("mc_std_error", format_number(stats.std_error));
    }
    fill_series(table, run.series);
    out.push_back({word, std::move(table)});
  }
  return out;
}

std::vector<NamedTable> run_classical_distribution(const std::string& preset,
                                                   const Params& p,
                                                   const Overrides& o,
                                                   const RunOptions& opt) {
  const auto s = classical_setup(p);
  const std::string word = preset == "figure2"   ? "A"
                           : preset == "figure3" ? "B"
                                                 : s.schedule;
  const auto sched = FlashSchedule::parse(word);
  const auto before = evolve(delta_init(0), s.suite, sched, s.t - 1).final;
  const auto cur = step(before, s.suite, sched.at(before.time()));
  const auto after = step(cur, s.suite, sched.at(cur.time()));
  const auto smooth = parity_smooth(before, cur, after);

  const double slope_a = 2.0 * s.suite.a.pa - 1.0;
  const auto potential =
      preset == "figure2"
          ? ClassicalPotential::linear(slope_a)
          : ClassicalPotential::ratchet(
                GameBParams{s.suite.b.p0 + s.epsilon, s.suite.b.p1 + s.epsilon},
                slope_a);

  auto table = base_table(OutputTable::Kind::distribution, preset, word, o, opt);
  add_suite_meta(table, s);
  table.add_meta("schedule", word);
  table.add_meta("smoothing", "[p(x,t-1) + 2p(x,t) + p(x,t+1)]/4");
  table.add_meta("expected_payoff", format_number(expected_payoff(cur)));
  table.columns = {"x", "probability", "probability_smoothed", "V"};
  for (auto x = smooth.min_x(); x <= smooth.max_x(); ++x) {
    table.rows.push_back({static_cast<double>(x), cur.at(x), smooth.at(x),
                          potential(static_cast<double>(x))});
  }
  return {{word, std::move(table)}};
}

// ------------------------------------------------------------------ quantum

struct QuantumSetup {
  double theta;
  double slope;
  double level;
  std::int64_t t;
  std::string schedule;
  QlgaConventions conv;
  std::string source;
  std::string calibration_note;
};

QuantumSetup quantum_setup(const std::string& preset, const Params& p,
                           const RunOptions& opt) {
  QuantumSetup s;
  s.theta = p.real("theta", std::numbers::pi / 4.0);
  s.slope = p.real("slope", QPotential::kDefaultSlope);
  s.level = p.real("level", QPotential::kDefaultLevel);
  s.t = positive_steps(p, preset == "figure10" ? 5000 : 100);
  s.schedule = p.text("schedule", "BAAAA");
  QSchedule::parse(s.schedule, QPotential::zero(), QPotential::zero());

  std::optional<PhaseOrder> order = opt.phase_order;
  if (p.has("phase_order")) {
    order = parse_phase_order(p.text("phase_order", ""));
  }
  std::optional<InitSign> init;
  if (p.has("init_sign")) init = parse_init_sign(p.text("init_sign", ""));
  std::optional<int> anchor;
  if (p.has("residue_anchor")) {
    anchor = static_cast<int>(p.integer("residue_anchor", 0));
  }

  if (order && init && anchor) {
    s.conv = {*order, *init, residue3(*anchor)};
    s.source = "override";
    return s;
  }
  CalibrationParams cp;
  cp.theta = s.theta;
  cp.slope = s.slope;
  cp.level = s.level;
  cp.epsilon = p.real("epsilon", 0.005);
  const auto report = calibrate_phase_order(cp);
  if (const auto* sel = report.selected_conventions()) {
    s.conv = *sel;
    s.calibration_note = "selected " + describe(*sel);
  } else {
    s.calibration_note = "no candidate matched; using defaults";
  }
  const bool any_override = order || init || anchor;
  if (order) s.conv.order = *order;
  if (init) s.conv.init = *init;
  if (anchor) s.conv.residue_anchor = residue3(*anchor);
  s.source = any_override ? "calibrated+override" : "calibrated";
  return s;
}

void add_quantum_meta(OutputTable& t, const QuantumSetup& s) {
  t.add_meta("theta", format_number(s.theta));
  t.add_meta("slope", format_number(s.slope));
  t.add_meta("level", format_number(s.level));
  t.add_meta("steps", std::to_string(s.t));
  t.add_meta("phase_order", to_string(s.conv.order));
  t.add_meta("init_sign", to_string(s.conv.init));
  t.add_meta("residue_anchor", std::to_string(s.conv.residue_anchor));
  t.add_meta("conventions_source", s.source);
  if (!s.calibration_note.empty()) t.add_meta("calibration", s.calibration_note);
  t.add_meta("smoothing", "none (raw Born marginals)");
}

std::vector<NamedTable> run_quantum_series(const std::string& preset,
                                           const Params& p, const Overrides& o,
                                           const RunOptions& opt) {
  const auto s = quantum_setup(preset, p, opt);
  const auto fit_t_max = p.integer("fit_t_max", 1000);
  std::vector<NamedTable> out;
  for (const std::string& word : {std::string("A"), std::string("B"),
                                 s.schedule}) {
    const auto run =
        run_quantum_word(word, s.conv, s.theta, s.slope, s.level, s.t);
    auto table =
        base_table(OutputTable::Kind::timeseries, preset, word, o, opt);
    add_quantum_meta(table, s);
    table.add_meta("schedule", word);
    double max_abs = 0.0;
    double mean = 0.0;
    for (const auto& pt : run.series) {
      max_abs = std::max(max_abs, std::abs(pt.expected_payoff));
      mean += pt.expected_payoff;
    }
    mean /= static_cast<double>(run.series.size());
    table.add_meta("norm_deviation",
                   format_number(std::abs(run.final.norm_squared() - 1.0)));
    table.add_meta("max_abs_expected_payoff", format_number(max_abs));
    table.add_meta("time_average_expected_payoff", format_number(mean));
    const auto fit = fit_cosine_growth(run.series, fit_t_max);
    table.add_meta("fit_model", "A*(cos(b*t)-1)");
    table.add_meta("fit_t_max", std::to_string(fit_t_max));
    table.add_meta("fit_A", format_number(fit.amplitude));
    table.add_meta("fit_b", format_number(fit.frequency));
    table.add_meta("fit_rms_residual", format_number(fit.rms_residual));
    fill_series(table, run.series);
    out.push_back({word, std::move(table)});
  }
  return out;
}

std::vector<NamedTable> run_quantum_distribution(const std::string& preset,
                                                 const Params& p,
                                                 const Overrides& o,
                                                 const RunOptions& opt) {
  const auto s = quantum_setup(preset, p, opt);
  const std::string word = preset == "figure7"   ? "A"
                           : preset == "figure8" ? "B"
                                                 : s.schedule;
  const auto run =
      run_quantum_word(word, s.conv, s.theta, s.slope, s.level, s.t);
  const auto marginal = born_marginal(run.final);
  auto table = base_table(OutputTable::Kind::distribution, preset, word, o, opt);
  add_quantum_meta(table, s);
  table.add_meta("schedule", word);
  table.add_meta("expected_payoff", format_number(q_expected_payoff(run.final)));

  std::optional<QPotential> pot;
  if (preset == "figure7") pot = QPotential::linear_a(s.slope);
  if (preset == "figure8") {
    pot = QPotential::ratchet_b(s.slope, s.level, s.conv.residue_anchor);
  }
  if (pot) table.columns.push_back("V");
  for (auto x = marginal.min_x(); x <= marginal.max_x(); ++x) {
    std::vector<double> row{static_cast<double>(x), marginal.at(x)};
    if (pot) row.push_back((*pot)(x));
    table.rows.push_back(std::move(row));
  }
  return {{word, std::move(table)}};
}

// ---------------------------------------------------------------------- crw

std::vector<NamedTable> run_crw_demo(const std::string& preset,
                                     const Params& p, const Overrides& o,
                                     const RunOptions& opt) {
  const auto t = positive_steps(p, 100);
  const auto start = p.text("start", "symmetric");
  if (start != "symmetric" && start != "right" && start != "left") {
    throw std::invalid_argument("start must be symmetric, left or right");
  }
  std::vector<double> ps;
  std::stringstream list(p.text("p_values", "0.1,0.5,0.9"));
  for (std::string item; std::getline(list, item, ',');) {
    ps.push_back(Params::parse_real("p_values", item));
  }
  if (ps.empty()) throw std::invalid_argument("p_values is empty");

  std::vector<NamedTable> out;
  for (double prob : ps) {
    const auto init = start == "symmetric"
                          ? LgaDensity::symmetric_delta(0)
                          : LgaDensity::delta(0, start == "right"
                                                     ? Direction::right
                                                     : Direction::left);
    const auto state = crw_evolve(init, ScatterProb(prob), t);
    const auto marginal = site_marginal(state);
    const auto m = crw_moments(state);
    const auto name = "p" + format_number(prob);
    auto table =
        base_table(OutputTable::Kind::distribution, preset, name, o, opt);
    table.add_meta("p", format_number(prob));
    table.add_meta("steps", std::to_string(t));
    table.add_meta("start", start);
    table.add_meta("phase_order", "n/a");
    table.add_meta("mean", format_number(m.mean));
    table.add_meta("variance", format_number(m.variance));
    for (auto x = marginal.min_x(); x <= marginal.max_x(); ++x) {
      table.rows.push_back({static_cast<double>(x), marginal.at(x)});
    }
    out.push_back({name, std::move(table)});
  }
  return out;
}

const PresetDef& find_preset(const std::string& name) {
  for (const auto& d : preset_defs()) {
    if (d.name == name) return d;
  }
  throw UnknownPreset("unknown preset '" + name + "'");
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& d : preset_defs()) n.push_back(d.name);
    return n;
  }();
  return names;
}

std::vector<std::string> preset_keys(const std::string& preset) {
  return family_keys(find_preset(preset).family);
}

std::vector<NamedTable> run_preset(const std::string& preset,
                                   const Overrides& overrides,
                                   const RunOptions& options) {
  const auto& def = find_preset(preset);
  const Params params(overrides, def.family);
  switch (def.family) {
    case Family::classical:
      if (preset == "figure1") {
        return run_figure1(preset, params, overrides, options);
      }
      return run_classical_distribution(preset, params, overrides, options);
    case Family::quantum:
      if (preset == "figure6" || preset == "figure10") {
        return run_quantum_series(preset, params, overrides, options);
      }
      return run_quantum_distribution(preset, params, overrides, options);
    case Family::crw:
      return run_crw_demo(preset, params, overrides, options);
  }
  throw UnknownPreset("unknown preset '" + preset + "'");
}

Overrides parse_config(std::istream& is) {
  Overrides o;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  " is not key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    o[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return o;
}

std::string analyze(const GameBParams& params) {
  params.validate();
  std::ostringstream os;
  const auto t = build_transition_matrix(params);
  os << "game B: p0=" << format_number(params.p0)
     << " p1=" << format_number(params.p1) << "\n\n";
  os << "transition matrix (column = from residue, row = to residue):\n";
  for (int i = 0; i < 3; ++i) {
    os << "  ";
    for (int j = 0; j < 3; ++j) {
      os << (j ? "  " : "") << format_number(t(i, j));
    }
    os << '\n';
  }
  const auto v = stationary_distribution(t);
  os << "stationary distribution: (" << format_number(v[0]) << ", "
     << format_number(v[1]) << ", " << format_number(v[2]) << ")\n";
  os << "long-run rate per play: " << format_number(long_run_rate_B(params))
     << '\n';
  os << "fairness determinant: " << format_number(fairness_determinant(params))
     << '\n';
  try {
    os << "fair p0 for this p1: " << format_number(fair_p0_of_p1(params.p1))
       << '\n';
  } catch (const std::domain_error& e) {
    os << "fair p0 for this p1: none (" << e.what() << ")\n";
  }
  try {
    os << "ratchet breakpoint b: " << format_number(ratchet_break_b(params))
       << '\n';
  } catch (const std::domain_error& e) {
    os << "ratchet breakpoint b: n/a (" << e.what() << ")\n";
  }
  return os.str();
}

}  // namespace parrondo
