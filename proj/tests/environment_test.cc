// Copyright 2026 The dpncb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpncb/environment.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "dpncb/errors.h"
#include "dpncb/rng.h"

namespace dpncb {
namespace {

double empirical_mean(const ArmSpec& arm, int n, std::uint64_t seed) {
  RngStream s = derive_stream(seed, 0);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += arm.sample(s);
  return sum / n;
}

TEST(ArmSpecTest, AnalyticMeans) {
  EXPECT_DOUBLE_EQ(true_mean(ArmSpec::bernoulli(0.3)), 0.3);
  // Numeric integration of 4x^4 on [0, 1] (tests/oracles) gives 0.8.
  EXPECT_NEAR(true_mean(ArmSpec::beta(4.0, 1.0)), 0.8, 1e-15);
  EXPECT_DOUBLE_EQ(true_mean(ArmSpec::two_point(0.4, 1.0, 0.5)), 0.7);
  EXPECT_DOUBLE_EQ(true_mean(ArmSpec::uniform01()), 0.5);
  EXPECT_DOUBLE_EQ(true_mean(ArmSpec::constant(0.5)), 0.5);
}

TEST(ArmSpecTest, RejectsInvalidParameters) {
  EXPECT_THROW(ArmSpec::bernoulli(0.0), ConfigError);
  EXPECT_THROW(ArmSpec::bernoulli(1.5), ConfigError);
  EXPECT_THROW(ArmSpec::beta(0.0, 1.0), ConfigError);
  EXPECT_THROW(ArmSpec::two_point(0.4, 1.0, 1.5), ConfigError);
  EXPECT_THROW(ArmSpec::two_point(0.6, 0.4, 0.5), ConfigError);
  EXPECT_THROW(ArmSpec::two_point(0.0, 0.0, 0.5), ConfigError);
  EXPECT_THROW(ArmSpec::constant(0.0), ConfigError);
  EXPECT_THROW(ArmSpec::bernoulli_log(0.5), ConfigError);
  EXPECT_THROW(ArmSpec::bernoulli_log(-std::numeric_limits<double>::infinity()),
               ConfigError);
}

TEST(ArmSpecTest, ConstantArmAlwaysReturnsValue) {
  RngStream s = derive_stream(1, 1);
  const ArmSpec arm = ArmSpec::constant(0.5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(arm.sample(s), 0.5);
}

TEST(ArmSpecTest, MonteCarloMeans) {
  EXPECT_NEAR(empirical_mean(ArmSpec::bernoulli(0.25), 100000, 1), 0.25, 0.01);
  EXPECT_NEAR(empirical_mean(ArmSpec::uniform01(), 100000, 2), 0.5, 0.01);
  EXPECT_NEAR(empirical_mean(ArmSpec::beta(4.0, 1.0), 100000, 3), 0.8, 0.01);
  EXPECT_NEAR(empirical_mean(ArmSpec::beta(1.0, 3.0), 100000, 4), 0.25, 0.01);
  EXPECT_NEAR(empirical_mean(ArmSpec::beta(2.0, 5.0), 100000, 5), 2.0 / 7.0,
              0.01);
  EXPECT_NEAR(empirical_mean(ArmSpec::two_point(0.4, 1.0, 0.5), 100000, 6), 0.7,
              0.01);
}

TEST(ArmSpecTest, SamplesStayInUnitIntervalUnderFuzzing) {
  const std::vector<ArmSpec> arms = {ArmSpec::bernoulli(0.37),
                                     ArmSpec::beta(4.0, 1.0),
                                     ArmSpec::beta(0.3, 0.7),
                                     ArmSpec::beta(2.5, 1.5),
                                     ArmSpec::two_point(0.4, 1.0, 0.5),
                                     ArmSpec::uniform01(),
                                     ArmSpec::constant(1.0),
                                     ArmSpec::bernoulli_log(-1693.0)};
  RngStream s = derive_stream(99, 0);
  for (const ArmSpec& arm : arms) {
    for (int i = 0; i < 1000000; ++i) {
      const double x = arm.sample(s);
      ASSERT_GE(x, 0.0) << arm_kind_name(arm.kind());
      ASSERT_LE(x, 1.0) << arm_kind_name(arm.kind());
    }
  }
}

TEST(ArmSpecTest, UnderflowingBernoulliNeverPays) {
  const ArmSpec arm = ArmSpec::bernoulli_log(-1000.0);
  EXPECT_EQ(arm.mean(), 0.0);
  EXPECT_DOUBLE_EQ(arm.log_mean(), -1000.0);
  RngStream s = derive_stream(1, 2);
  for (int i = 0; i < 100000; ++i) ASSERT_EQ(arm.sample(s), 0.0);
}

TEST(BanditInstanceTest, NeedsTwoArms) {
  EXPECT_THROW(BanditInstance({ArmSpec::bernoulli(0.5)}), ConfigError);
}

TEST(BanditInstanceTest, MuStarAndLogMeans) {
  const BanditInstance inst(
      {ArmSpec::bernoulli(0.2), ArmSpec::beta(4.0, 1.0), ArmSpec::uniform01()});
  EXPECT_EQ(inst.num_arms(), 3u);
  EXPECT_EQ(inst.best_arm(), 1u);
  EXPECT_DOUBLE_EQ(inst.mu_star(), 0.8);
  EXPECT_DOUBLE_EQ(inst.log_means()[0], std::log(0.2));
  EXPECT_DOUBLE_EQ(inst.log_means()[2], std::log(0.5));
  EXPECT_THROW(inst.arm(3), IndexError);
  RngStream s = derive_stream(1, 1);
  EXPECT_THROW(sample_reward(inst, 3, s), IndexError);
}

TEST(PresetTest, AdversarialLogMean) {
  const BanditInstance inst = adversarial_instance(100);
  ASSERT_EQ(inst.num_arms(), 2u);
  EXPECT_NEAR(inst.log_means()[0], -169.31471805599453094, 1e-12);
  EXPECT_DOUBLE_EQ(inst.mu_star(), 1.0);
  EXPECT_EQ(inst.best_arm(), 1u);
  EXPECT_NEAR(adversarial_instance(1000).log_means()[0],
              -1000.0 * (1.0 + std::numbers::ln2), 1e-9);
}

TEST(PresetTest, Bern50MeansInRangeAndSeeded) {
  const BanditInstance a = bern50_instance(1);
  const BanditInstance b = bern50_instance(1);
  const BanditInstance c = bern50_instance(2);
  ASSERT_EQ(a.num_arms(), 50u);
  bool differs = false;
  for (std::size_t i = 0; i < 50; ++i) {
    const double m = a.arm(i).mean();
    EXPECT_GT(m, 0.005);
    EXPECT_LT(m, 1.0);
    EXPECT_EQ(a.arm(i).kind(), ArmKind::kBernoulli);
    EXPECT_EQ(m, b.arm(i).mean());
    differs = differs || m != c.arm(i).mean();
  }
  EXPECT_TRUE(differs);
}

TEST(PresetTest, Mixed50BucketRule) {
  EXPECT_EQ(mixed50_arm_for(0.6).kind(), ArmKind::kBeta);
  EXPECT_DOUBLE_EQ(mixed50_arm_for(0.6).mean(), 0.8);
  EXPECT_EQ(mixed50_arm_for(0.75).kind(), ArmKind::kBernoulli);
  EXPECT_DOUBLE_EQ(mixed50_arm_for(0.9).mean(), 0.9);
  EXPECT_EQ(mixed50_arm_for(0.3).kind(), ArmKind::kTwoPoint);
  EXPECT_DOUBLE_EQ(mixed50_arm_for(0.3).mean(), 0.7);
  EXPECT_EQ(mixed50_arm_for(0.1).kind(), ArmKind::kUniform01);

  const BanditInstance inst = mixed50_instance(1);
  ASSERT_EQ(inst.num_arms(), 50u);
  for (std::size_t i = 0; i < 50; ++i) {
    EXPECT_DOUBLE_EQ(inst.log_means()[i], std::log(true_mean(inst.arm(i))));
  }
}

TEST(PresetTest, UnknownPresetIsConfigError) {
  EXPECT_THROW(make_figure_instance("bern51", 1), ConfigError);
  EXPECT_EQ(make_figure_instance("bern50", 4).num_arms(), 50u);
}

TEST(ReplayTest, RewardsByRound) {
  const ReplayTape tape({0.1, 0.9});
  EXPECT_EQ(replay_reward(tape, 2), 0.9);
  EXPECT_EQ(replay_reward(tape, 1), 0.1);
  EXPECT_THROW(replay_reward(tape, 0), IndexError);
  EXPECT_THROW(replay_reward(tape, 3), IndexError);
  const ReplayTape zeros(std::vector<double>(5, 0.0));
  for (int t = 1; t <= 5; ++t) EXPECT_EQ(replay_reward(zeros, t), 0.0);
  EXPECT_THROW(ReplayTape({0.5, 1.5}), DomainError);
}

TEST(ReplayTest, NeighborsDifferAtOneRound) {
  const ReplayTape a({1, 0, 1, 1});
  const ReplayTape b({1, 0, 0, 1});
  EXPECT_TRUE(are_neighbors(a, b));
  EXPECT_FALSE(are_neighbors(a, a));
  EXPECT_FALSE(are_neighbors(a, ReplayTape({0, 1, 1, 1})));
  EXPECT_FALSE(are_neighbors(a, ReplayTape({1, 0, 1})));
  for (int t = 1; t <= 4; ++t) {
    if (t != 3) EXPECT_EQ(replay_reward(a, t), replay_reward(b, t));
  }
}

TEST(ReplayTest, EnvironmentIgnoresArm) {
  const ReplayTape tape({0.25, 0.75});
  ReplayEnvironment env(tape);
  EXPECT_EQ(env.pull(0, 1), 0.25);
  EXPECT_EQ(env.pull(1, 1), 0.25);
  EXPECT_EQ(env.pull(0, 2), 0.75);
}

}  // namespace
}  // namespace dpncb
