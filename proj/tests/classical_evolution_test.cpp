#include "parrondo/classical_evolution.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

namespace parrondo {
namespace {

// Independent oracle for <x>(t) under game B from x = 0: track only the
// residue distribution and accumulate the expected increment per play.
double residue_chain_mean(const GameBParams& b, int t) {
  std::array<double, 3> d{1.0, 0.0, 0.0};
  double mean = 0.0;
  const std::array<double, 3> q{b.p0, b.p1, b.p1};
  for (int s = 0; s < t; ++s) {
    for (int r = 0; r < 3; ++r) mean += d[r] * (2.0 * q[r] - 1.0);
    d = {d[1] * (1 - q[1]) + d[2] * q[2], d[0] * q[0] + d[2] * (1 - q[2]),
         d[0] * (1 - q[0]) + d[1] * q[1]};
  }
  return mean;
}

TEST(DeltaInit, Basics) {
  const auto d0 = delta_init(0);
  EXPECT_EQ(d0.at(0), 1.0);
  EXPECT_EQ(d0.at(1), 0.0);
  EXPECT_EQ(d0.time(), 0);
  EXPECT_EQ(delta_init(5).at(5), 1.0);
  EXPECT_EQ(delta_init(5).total(), 1.0);
}

TEST(Step, GameAUnbiased) {
  GameSuite s{{0.5}, {0.5, 0.5}};
  const auto d = step(delta_init(0), s, GameLabel::A);
  EXPECT_EQ(d.at(-1), 0.5);
  EXPECT_EQ(d.at(1), 0.5);
  EXPECT_EQ(d.at(0), 0.0);
  EXPECT_EQ(d.time(), 1);
}

TEST(Step, GameBUsesCoinB0AtResidueZero) {
  GameSuite s{{0.5}, {0.1, 0.75}};
  const auto d = step(delta_init(0), s, GameLabel::B);
  EXPECT_DOUBLE_EQ(d.at(1), 0.1);
  EXPECT_DOUBLE_EQ(d.at(-1), 0.9);
  const auto e = step(delta_init(1), s, GameLabel::B);
  EXPECT_DOUBLE_EQ(e.at(2), 0.75);
  EXPECT_DOUBLE_EQ(e.at(0), 0.25);
  // -3 is residue 0, -1 is residue 2.
  EXPECT_DOUBLE_EQ(step(delta_init(-3), s, GameLabel::B).at(-2), 0.1);
  EXPECT_DOUBLE_EQ(step(delta_init(-1), s, GameLabel::B).at(0), 0.75);
}

TEST(Evolve, GameAClosedForm) {
  GameSuite s{{0.495}, {0.5, 0.5}};
  const auto run = evolve(delta_init(0), s, FlashSchedule::parse("A"), 100);
  ASSERT_EQ(run.series.size(), 101u);
  EXPECT_EQ(run.series.front().t, 0);
  EXPECT_EQ(run.series.back().t, 100);
  EXPECT_NEAR(run.series.back().expected_payoff, -1.0, 1e-9);
  EXPECT_NEAR(expected_payoff(run.final), -1.0, 1e-9);
  EXPECT_NEAR(variance(run.final), 4 * 0.495 * 0.505 * 100, 1e-9);
}

TEST(Evolve, FairCoinAIsIdenticallyZero) {
  GameSuite s{{0.5}, {0.5, 0.5}};
  const auto run = evolve(delta_init(0), s, FlashSchedule::parse("A"), 100);
  for (const auto& p : run.series) EXPECT_NEAR(p.expected_payoff, 0.0, 1e-12);
  EXPECT_NEAR(variance(run.final), 100.0, 1e-9);
}

TEST(Evolve, ParrondoSignPattern) {
  const auto s = GameSuite::biased(0.005);
  const auto at100 = [&](const char* w) {
    return evolve(delta_init(0), s, FlashSchedule::parse(w), 100)
        .series.back()
        .expected_payoff;
  };
  EXPECT_LT(at100("A"), 0.0);
  EXPECT_LT(at100("B"), 0.0);
  EXPECT_GT(at100("AABB"), 0.0);
}

TEST(Evolve, GameBMatchesResidueChainOracle) {
  const auto s = GameSuite::biased(0.005);
  const auto run = evolve(delta_init(0), s, FlashSchedule::parse("B"), 1000);
  EXPECT_NEAR(run.series[100].expected_payoff, residue_chain_mean(s.b, 100),
              1e-9);
  EXPECT_NEAR(run.series[1000].expected_payoff, residue_chain_mean(s.b, 1000),
              1e-9);
  EXPECT_NEAR(run.series[100].expected_payoff, -1.392320168245624, 1e-9);
}

TEST(Evolve, ContinuesScheduleFromCurrentTime) {
  const auto s = GameSuite::biased(0.005);
  const auto sched = FlashSchedule::parse("AABB");
  const auto whole = evolve(delta_init(0), s, sched, 7);
  const auto half = evolve(delta_init(0), s, sched, 3);
  const auto rest = evolve(half.final, s, sched, 4);
  EXPECT_EQ(whole.final.weights(), rest.final.weights());
}

TEST(Evolve, RejectsNegativeSteps) {
  EXPECT_THROW(evolve(delta_init(0), GameSuite::biased(0.0),
                      FlashSchedule::parse("A"), -1),
               std::invalid_argument);
}

TEST(FlashScheduleTest, ParseAndCycle) {
  const auto s = FlashSchedule::parse("AABB");
  EXPECT_EQ(s.at(0), GameLabel::A);
  EXPECT_EQ(s.at(2), GameLabel::B);
  EXPECT_EQ(s.at(5), GameLabel::A);
  EXPECT_EQ(s.str(), "AABB");
  EXPECT_THROW(FlashSchedule::parse(""), std::invalid_argument);
  EXPECT_THROW(FlashSchedule::parse("ABC"), std::invalid_argument);
}

TEST(ExpectedPayoff, Arithmetic) {
  EXPECT_EQ(expected_payoff(delta_init(0)), 0.0);
  const PayoffDistribution d(-1, {0.9, 0.0, 0.1});
  EXPECT_NEAR(expected_payoff(d), -0.8, 1e-15);
  EXPECT_EQ(variance(delta_init(3)), 0.0);
}

TEST(ParitySmooth, IdempotentOnEqualInputs) {
  const PayoffDistribution a(0, {1.0}, 4), b(0, {1.0}, 5), c(0, {1.0}, 6);
  const auto s = parity_smooth(a, b, c);
  EXPECT_EQ(s.at(0), 1.0);
  EXPECT_EQ(s.time(), 5);
}

TEST(ParitySmooth, FillsBothParities) {
  const GameSuite s{{0.495}, {0.5, 0.5}};
  const auto sched = FlashSchedule::parse("A");
  const auto d99 = evolve(delta_init(0), s, sched, 99).final;
  const auto d100 = step(d99, s, GameLabel::A);
  const auto d101 = step(d100, s, GameLabel::A);
  EXPECT_EQ(d100.at(1), 0.0);
  const auto sm = parity_smooth(d99, d100, d101);
  EXPECT_GT(sm.at(0), 0.0);
  EXPECT_GT(sm.at(1), 0.0);
  EXPECT_NEAR(sm.total(), 1.0, 1e-12);
  EXPECT_EQ(sm.min_x(), -101);
  EXPECT_EQ(sm.max_x(), 101);
}

TEST(ParitySmooth, RejectsNonConsecutiveTimes) {
  const PayoffDistribution a(0, {1.0}, 1), b(0, {1.0}, 2), c(0, {1.0}, 4);
  EXPECT_THROW(parity_smooth(a, b, c), std::invalid_argument);
}

TEST(PayoffDistributionTest, RejectsNegativeOrEmpty) {
  EXPECT_THROW(PayoffDistribution(0, {}), std::invalid_argument);
  EXPECT_THROW(PayoffDistribution(0, {0.5, -0.1}), std::invalid_argument);
}

// ------------------------------------------------------------- properties

TEST(ClassicalProperty, ConservationLightconeParity) {
  const auto s = GameSuite::biased(0.005);
  for (const char* word : {"A", "B", "AABB", "BAB"}) {
    auto d = delta_init(0);
    const auto sched = FlashSchedule::parse(word);
    for (int t = 1; t <= 5000; ++t) {
      d = step(d, s, sched.at(d.time()));
      if (t % 250 == 0 || t < 20) {
        ASSERT_LE(std::abs(d.total() - 1.0), 1e-12) << word << " t=" << t;
        ASSERT_EQ(d.min_x(), -t);
        ASSERT_EQ(d.max_x(), t);
        for (auto x = d.min_x(); x <= d.max_x(); ++x) {
          if ((x + t) % 2 != 0) ASSERT_EQ(d.at(x), 0.0) << x;
        }
        ASSERT_EQ(d.at(t + 1), 0.0);
      }
    }
  }
}

TEST(ClassicalProperty, GameAClosedFormLongRun) {
  for (double pa : {0.3, 0.495, 0.5, 0.8}) {
    const GameSuite s{{pa}, {0.5, 0.5}};
    const auto run = evolve(delta_init(0), s, FlashSchedule::parse("A"), 10000);
    for (int t : {1, 10, 100, 1000, 10000}) {
      EXPECT_NEAR(run.series[t].expected_payoff, t * (2 * pa - 1), 1e-9);
    }
    EXPECT_NEAR(variance(run.final), 4 * pa * (1 - pa) * 10000, 1e-9);
  }
}

TEST(ClassicalProperty, FairGameBDriftVanishes) {
  const GameSuite s{{0.5}, {0.1, 0.75}};
  const auto run = evolve(delta_init(0), s, FlashSchedule::parse("B"), 10000);
  EXPECT_LE(std::abs(run.series.back().expected_payoff / 10000.0), 1e-3);
  EXPECT_NEAR(run.series.back().expected_payoff, residue_chain_mean(s.b, 10000),
              1e-8);
}

}  // namespace
}  // namespace parrondo
