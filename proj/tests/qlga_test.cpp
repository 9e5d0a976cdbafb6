#include "parrondo/qlga.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace parrondo {
namespace {

constexpr double kPi = std::numbers::pi;
using Dense = std::vector<std::vector<Amplitude>>;

Dense identity(std::size_t n) {
  Dense m(n, std::vector<Amplitude>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<Amplitude>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != Amplitude{})
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Oracle: the step as an explicit 2m x 2m matrix on the grown window, with
// basis index 2*j + (0 for left, 1 for right).
QState dense_step(const QState& s, double theta, const QPotential& pot,
                  PhaseOrder order) {
  const std::size_t m = s.size() + 2;
  const std::int64_t lo = s.offset() - 1;
  Dense scatter = identity(2 * m), shift(2 * m, std::vector<Amplitude>(2 * m)),
        phase = identity(2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    scatter[2 * j][2 * j] = std::cos(theta);
    scatter[2 * j + 1][2 * j + 1] = std::cos(theta);
    scatter[2 * j][2 * j + 1] = Amplitude(0, std::sin(theta));
    scatter[2 * j + 1][2 * j] = Amplitude(0, std::sin(theta));
    if (j > 0) shift[2 * (j - 1)][2 * j] = 1.0;
    if (j + 1 < m) shift[2 * (j + 1) + 1][2 * j + 1] = 1.0;
    const double v = pot(lo + static_cast<std::int64_t>(j));
    phase[2 * j][2 * j] = std::exp(Amplitude(0, -v));
    phase[2 * j + 1][2 * j + 1] = std::exp(Amplitude(0, -v));
  }
  Dense u;
  switch (order) {
    case PhaseOrder::pre: u = multiply(shift, multiply(scatter, phase)); break;
    case PhaseOrder::mid: u = multiply(shift, multiply(phase, scatter)); break;
    case PhaseOrder::post: u = multiply(phase, multiply(shift, scatter)); break;
  }
  std::vector<Amplitude> in(2 * m), out(2 * m);
  for (std::size_t i = 0; i < s.size(); ++i) {
    in[2 * (i + 1)] = s.lane(Direction::left)[i];
    in[2 * (i + 1) + 1] = s.lane(Direction::right)[i];
  }
  for (std::size_t i = 0; i < 2 * m; ++i)
    for (std::size_t j = 0; j < 2 * m; ++j) out[i] += u[i][j] * in[j];
  std::vector<Amplitude> l(m), r(m);
  for (std::size_t j = 0; j < m; ++j) {
    l[j] = out[2 * j];
    r[j] = out[2 * j + 1];
  }
  return QState(lo, l, r, s.time() + 1);
}

QState random_state(std::mt19937_64& rng, std::int64_t offset, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<Amplitude> l(n), r(n);
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    l[i] = {g(rng), g(rng)};
    r[i] = {g(rng), g(rng)};
    norm += std::norm(l[i]) + std::norm(r[i]);
  }
  const double k = 1.0 / std::sqrt(norm);
  for (std::size_t i = 0; i < n; ++i) {
    l[i] *= k;
    r[i] *= k;
  }
  return QState(offset, l, r);
}

QSchedule preset(const char* word, int anchor = 0) {
  return QSchedule::parse(word, QPotential::linear_a(),
                          QPotential::ratchet_b(QPotential::kDefaultSlope,
                                                QPotential::kDefaultLevel,
                                                anchor));
}

TEST(ScatterCoefficientsTest, Examples) {
  const auto id = scatter_coefficients({0.0});
  EXPECT_EQ(id.diag, Amplitude(1, 0));
  EXPECT_EQ(id.offdiag, Amplitude(0, 0));
  const auto swap = scatter_coefficients({kPi / 2});
  EXPECT_NEAR(std::abs(swap.diag), 0.0, 1e-16);
  EXPECT_NEAR(std::abs(swap.offdiag - Amplitude(0, 1)), 0.0, 1e-16);
  const auto quarter = scatter_coefficients({kPi / 4});
  EXPECT_NEAR(std::abs(quarter.diag - 1 / std::sqrt(2.0)), 0.0, 2e-16);
  EXPECT_NEAR(std::abs(quarter.offdiag - Amplitude(0, 1 / std::sqrt(2.0))),
              0.0, 2e-16);
}

TEST(ScatterCoefficientsTest, MatrixIsUnitary) {
  for (double theta : {-2.0, 0.3, 1.0, 4.0}) {
    const auto [d, o] = scatter_coefficients({theta});
    // U U^dagger for [[d, o], [o, d]].
    EXPECT_NEAR(std::norm(d) + std::norm(o), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(d * std::conj(o) + o * std::conj(d)), 0.0, 1e-15);
  }
}

TEST(QPotentialTest, Values) {
  const auto a = QPotential::linear_a();
  EXPECT_DOUBLE_EQ(a(2500), kPi);
  const auto b = QPotential::ratchet_b();
  EXPECT_DOUBLE_EQ(b(0), kPi / 3);
  EXPECT_DOUBLE_EQ(b(1), kPi / 6 + 2 * kPi / 5000);
  EXPECT_DOUBLE_EQ(b(-1), 0.0 - 2 * kPi / 5000);  // -1 mod 3 = 2
  for (std::int64_t x = -20; x < 20; ++x) {
    EXPECT_NEAR(b(x + 3) - b(x), 3 * QPotential::kDefaultSlope, 1e-13);
  }
  const auto shifted = QPotential::ratchet_b(0.0, kPi / 3, 2);
  EXPECT_DOUBLE_EQ(shifted(1), kPi / 3);  // (1 + 2) mod 3 = 0
  EXPECT_EQ(QPotential::zero()(12345), 0.0);
  EXPECT_EQ(QPotential::zero().with_constant(0.7)(3), 0.7);
}

TEST(StandardInit, Properties) {
  const auto s = standard_init();
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
  EXPECT_EQ(q_expected_payoff(s), 0.0);
  EXPECT_EQ(born_marginal(s).at(0), s.norm_squared());
  EXPECT_GT(s.at(0, Direction::left).real(), 0.0);
  EXPECT_GT(s.at(0, Direction::right).real(), 0.0);
  EXPECT_LT(standard_init(InitSign::minus).at(0, Direction::right).real(), 0.0);
}

TEST(QStep, PureAdvection) {
  const QState s(0, {0.0}, {1.0});
  const auto n = qstep(s, {0.0}, QPotential::zero());
  EXPECT_EQ(n.at(1, Direction::right), Amplitude(1.0));
  EXPECT_EQ(n.at(-1, Direction::left), Amplitude(0.0));
  EXPECT_EQ(n.time(), 1);
}

TEST(QStep, UnbiasedFirstStep) {
  const auto n = qstep(standard_init(), {kPi / 4}, QPotential::zero());
  const Amplitude expected =
      (std::cos(kPi / 4) + Amplitude(0, std::sin(kPi / 4))) / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(n.at(-1, Direction::left) - expected), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(n.at(1, Direction::right) - expected), 0.0, 1e-15);
  const auto m = born_marginal(n);
  EXPECT_NEAR(m.at(-1), 0.5, 1e-15);
  EXPECT_NEAR(m.at(1), 0.5, 1e-15);
  EXPECT_NEAR(q_expected_payoff(n), 0.0, 1e-15);
}

TEST(QStep, MatchesDenseMatrixOracle) {
  std::mt19937_64 rng(3);
  const auto pots = {QPotential::zero(), QPotential::linear_a(0.37),
                     QPotential::ratchet_b(0.11, 1.3, 1).with_constant(0.2)};
  for (const auto& pot : pots) {
    for (PhaseOrder order :
         {PhaseOrder::pre, PhaseOrder::mid, PhaseOrder::post}) {
      const auto s = random_state(rng, -4, 7);
      const auto fast = qstep(s, {0.6}, pot, order);
      const auto dense = dense_step(s, 0.6, pot, order);
      ASSERT_EQ(fast.min_x(), dense.min_x());
      ASSERT_EQ(fast.size(), dense.size());
      for (auto x = fast.min_x(); x <= fast.max_x(); ++x) {
        for (Direction d : {Direction::left, Direction::right}) {
          EXPECT_NEAR(std::abs(fast.at(x, d) - dense.at(x, d)), 0.0, 1e-14);
        }
      }
    }
  }
}

TEST(QStep, PreAndMidCoincide) {
  const auto sched = preset("BAAAA");
  const auto a = q_evolve(standard_init(), {kPi / 4}, sched, 50, PhaseOrder::pre);
  const auto b = q_evolve(standard_init(), {kPi / 4}, sched, 50, PhaseOrder::mid);
  for (auto x = a.final.min_x(); x <= a.final.max_x(); ++x) {
    for (Direction d : {Direction::left, Direction::right}) {
      EXPECT_NEAR(std::abs(a.final.at(x, d) - b.final.at(x, d)), 0.0, 1e-13);
    }
  }
}

TEST(QEvolve, SeriesShape) {
  const auto run = q_evolve(standard_init(), {kPi / 4}, preset("Z"), 10);
  ASSERT_EQ(run.series.size(), 11u);
  EXPECT_EQ(run.series.front().t, 0);
  EXPECT_EQ(run.series.back().t, 10);
  EXPECT_THROW(q_evolve(standard_init(), {kPi / 4}, preset("Z"), -1),
               std::invalid_argument);
}

// Regression constants frozen from an independent numpy implementation.
TEST(QEvolve, DefaultConventionsDriftUphillUnderVA) {
  const auto a = q_evolve(standard_init(), {kPi / 4}, preset("A"), 100);
  EXPECT_NEAR(a.series.back().expected_payoff, 2.2204010667644063, 1e-9);
  const auto b = q_evolve(standard_init(), {kPi / 4}, preset("B"), 100);
  EXPECT_NEAR(b.series.back().expected_payoff, 1.4791145229021616, 1e-9);
  const auto c = q_evolve(standard_init(), {kPi / 4}, preset("BAAAA"), 100);
  EXPECT_NEAR(c.series.back().expected_payoff, 10.20830520562449, 1e-9);
}

TEST(QEvolve, CalibratedConventionsGiveParrondoSigns) {
  const auto init = standard_init(InitSign::minus);
  const auto run = [&](const char* w) {
    return q_evolve(init, {kPi / 4}, preset(w, 2), 100, PhaseOrder::pre)
        .series.back()
        .expected_payoff;
  };
  EXPECT_NEAR(run("A"), -2.22040106676441, 1e-9);
  EXPECT_NEAR(run("B"), -1.4791145229021545, 1e-9);
  EXPECT_NEAR(run("BAAAA"), 1.095330095402531, 1e-9);
}

TEST(QExpectedPayoff, BoundedBySupport) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const auto s = random_state(rng, -3 + i, 5);
    const double bound = static_cast<double>(
        std::max(std::abs(s.min_x()), std::abs(s.max_x())));
    EXPECT_LE(std::abs(q_expected_payoff(s)), bound + 1e-12);
  }
}

// ------------------------------------------------------------- properties

TEST(QlgaProperty, UnitarityOver5000Steps) {
  for (const char* word : {"Z", "A", "B", "BAAAA"}) {
    for (PhaseOrder order : {PhaseOrder::pre, PhaseOrder::post}) {
      const auto run =
          q_evolve(standard_init(), {kPi / 4}, preset(word), 5000, order);
      EXPECT_LE(std::abs(run.final.norm_squared() - 1.0), 1e-12) << word;
    }
  }
}

TEST(QlgaProperty, Lightcone) {
  auto s = standard_init();
  const auto sched = preset("BAAAA");
  for (int t = 1; t <= 300; ++t) {
    s = qstep(s, {kPi / 4}, sched.at(s.time()));
    ASSERT_EQ(s.min_x(), -t);
    ASSERT_EQ(s.max_x(), t);
    ASSERT_EQ(s.at(t + 1, Direction::right), Amplitude(0.0));
    ASSERT_EQ(s.at(-t - 1, Direction::left), Amplitude(0.0));
  }
}

TEST(QlgaProperty, GlobalPhaseInvariance) {
  for (PhaseOrder order : {PhaseOrder::pre, PhaseOrder::post}) {
    const auto base = q_evolve(standard_init(), {kPi / 4}, preset("BAAAA"),
                               200, order);
    const auto shifted_sched = QSchedule::parse(
        "BAAAA", QPotential::linear_a().with_constant(1.234),
        QPotential::ratchet_b().with_constant(1.234));
    const auto shifted =
        q_evolve(standard_init(), {kPi / 4}, shifted_sched, 200, order);
    const auto a = born_marginal(base.final);
    const auto b = born_marginal(shifted.final);
    for (auto x = a.min_x(); x <= a.max_x(); ++x) {
      EXPECT_NEAR(a.at(x), b.at(x), 1e-14);
    }
  }
}

TEST(QlgaProperty, ZeroAngleIsBallistic) {
  const auto run = q_evolve(standard_init(), {0.0}, preset("Z"), 123);
  const auto m = born_marginal(run.final);
  EXPECT_NEAR(m.at(-123), 0.5, 1e-15);
  EXPECT_NEAR(m.at(123), 0.5, 1e-15);
  EXPECT_NEAR(m.total(), 1.0, 1e-15);
}

TEST(QlgaProperty, UnbiasedWalkHasZeroMean) {
  for (InitSign sign : {InitSign::plus, InitSign::minus}) {
    const auto run = q_evolve(standard_init(sign), {kPi / 4}, preset("Z"), 200);
    for (const auto& p : run.series) {
      ASSERT_NEAR(p.expected_payoff, 0.0, 1e-12) << p.t;
    }
  }
}

TEST(CosineFit, RecoversSyntheticParameters) {
  std::vector<TimePoint> series;
  for (int t = 0; t <= 1000; ++t) {
    series.push_back({t, 12.5 * (std::cos(0.0123 * t) - 1.0)});
  }
  const auto fit = fit_cosine_growth(series, 1000);
  EXPECT_EQ(fit.points, 1001u);
  EXPECT_NEAR(fit.frequency, 0.0123, 1e-7);
  EXPECT_NEAR(fit.amplitude, 12.5, 1e-4);
  EXPECT_LT(fit.rms_residual, 1e-4);
}

}  // namespace
}  // namespace parrondo
