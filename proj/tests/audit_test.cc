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

#include "dpncb/audit.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "dpncb/errors.h"
#include "dpncb/laplace.h"
#include "json.hpp"

namespace dpncb {
namespace {

std::vector<std::int64_t> laplace_histogram(double x, double epsilon,
                                            const AuditConfig& config,
                                            std::uint64_t tag) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(config.n_bins), 0);
  RngStream stream = derive_stream(config.seed, tag);
  const ScalarMechanism m = laplace_mechanism(epsilon);
  for (std::int64_t i = 0; i < config.trials; ++i) {
    ++counts[scalar_bin(m(x, stream), config)];
  }
  return counts;
}

PolicyParams two_arms(std::int64_t horizon, double epsilon, double c = 3.0) {
  PolicyParams p;
  p.k = 2;
  p.horizon = horizon;
  p.epsilon = epsilon;
  p.c = c;
  return p;
}

const ReplayTape kTape({1, 0, 1, 1, 0, 1});
const ReplayTape kTapePrime({0, 0, 1, 1, 0, 1});

TEST(ScalarBinTest, ClampsToEdges) {
  const AuditConfig c = AuditConfig::scalar_default();
  EXPECT_EQ(scalar_bin(-100.0, c), 0);
  EXPECT_EQ(scalar_bin(-8.0, c), 0);
  EXPECT_EQ(scalar_bin(8.999, c), 99);
  EXPECT_EQ(scalar_bin(9.0, c), 99);
  EXPECT_EQ(scalar_bin(std::numeric_limits<double>::infinity(), c), 99);
  EXPECT_EQ(scalar_bin(0.5, c), 49);
}

TEST(AuditConfigTest, Validation) {
  AuditConfig c = AuditConfig::scalar_default();
  EXPECT_NO_THROW(c.validate());
  c.trials = 100;
  EXPECT_THROW(c.validate(), ConfigError);
  c = AuditConfig::scalar_default();
  c.range_lo = c.range_hi;
  EXPECT_THROW(c.validate(), ConfigError);
  c = AuditConfig::scalar_default();
  c.confidence = 1.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = AuditConfig::scalar_default();
  c.min_count = 1;
  EXPECT_THROW(c.validate(), ConfigError);
  c = AuditConfig::sequence_default();
  EXPECT_NO_THROW(c.validate());
  c.trials = 50000;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(EstimateTest, OneSidedOutcomeIsUnbounded) {
  AuditConfig c = AuditConfig::scalar_default();
  c.min_count = 10;
  const std::vector<std::int64_t> a = {50, 50, 0};
  const std::vector<std::int64_t> b = {40, 40, 20};
  const AuditReport r = estimate_from_counts(a, b, 1.0, c);
  EXPECT_TRUE(r.unbounded());
  EXPECT_TRUE(std::isinf(r.epsilon_hat));
  EXPECT_EQ(r.verdict, AuditVerdict::kViolationSuspected);
}

TEST(EstimateTest, ErrorsOnDegenerateOrMismatched) {
  AuditConfig c = AuditConfig::scalar_default();
  c.min_count = 10;
  const std::vector<std::int64_t> one = {0, 100, 0};
  EXPECT_THROW(estimate_from_counts(one, one, 1.0, c), AuditError);
  const std::vector<std::int64_t> small = {3, 3, 3};
  EXPECT_THROW(estimate_from_counts(small, small, 1.0, c), AuditError);
  const std::vector<std::int64_t> two = {50, 50};
  EXPECT_THROW(estimate_from_counts(two, small, 1.0, c), ShapeError);
}

TEST(EstimateTest, HandComputedRatio) {
  AuditConfig c = AuditConfig::scalar_default();
  c.min_count = 10;
  c.confidence = 0.95;
  const std::vector<std::int64_t> a = {200, 100};
  const std::vector<std::int64_t> b = {100, 200};
  const AuditReport r = estimate_from_counts(a, b, 1.0, c);
  EXPECT_NEAR(r.epsilon_hat, std::log(2.0), 1e-15);
  EXPECT_EQ(r.bins_used, 2);
  // Bonferroni over two outcomes: z = Phi^-1(1 - 0.05 / 4).
  const double z = 2.2414027276049473;
  const double se = std::sqrt(1.0 / 200 + 1.0 / 100);
  EXPECT_NEAR(r.ci_low, std::log(2.0) - z * se, 1e-9);
  EXPECT_NEAR(r.ci_high, std::log(2.0) + z * se, 1e-9);
}

TEST(ScalarAuditTest, SameInputGivesZeroLowerBound) {
  const AuditReport r = audit_scalar_mechanism(
      laplace_mechanism(1.0), 0.3, 0.3, 1.0, AuditConfig::scalar_default());
  EXPECT_EQ(r.ci_low, 0.0);
  EXPECT_LT(r.epsilon_hat, 0.2);
  EXPECT_EQ(r.verdict, AuditVerdict::kConsistent);
}

TEST(ScalarAuditTest, LaplaceAtTarget) {
  const AuditReport r = audit_scalar_mechanism(
      laplace_mechanism(1.0), 0.0, 1.0, 1.0, AuditConfig::scalar_default());
  EXPECT_GT(r.epsilon_hat, 0.5);
  EXPECT_LE(r.epsilon_hat, 1.1);
  EXPECT_GT(r.ci_low, 0.4);
  EXPECT_LE(r.ci_low, 1.0);
  EXPECT_GE(r.ci_high, 1.0);
  EXPECT_EQ(r.verdict, AuditVerdict::kConsistent);
  // Every bin fully outside [0, 1] has ratio exactly e, so the analytic
  // supremum over used bins is 1.
  EXPECT_NEAR(r.epsilon_hat, 1.0, 0.15);
}

TEST(ScalarAuditTest, HalfScaleMechanismIsFlagged) {
  const AuditReport r = audit_scalar_mechanism(
      laplace_mechanism(2.0), 0.0, 1.0, 1.0, AuditConfig::scalar_default());
  EXPECT_EQ(r.verdict, AuditVerdict::kViolationSuspected);
  EXPECT_GT(r.ci_low, 1.0);
}

TEST(ScalarAuditTest, RejectsInputsOutsideUnitInterval) {
  EXPECT_THROW(audit_scalar_mechanism(laplace_mechanism(1.0), -0.1, 1.0, 1.0,
                                      AuditConfig::scalar_default()),
               DomainError);
}

TEST(ScalarAuditTest, IndependentOfThreadCount) {
  AuditConfig c = AuditConfig::scalar_default();
  c.trials = 200000;
  c.min_count = 500;
  const AuditReport one =
      audit_scalar_mechanism(laplace_mechanism(1.0), 0.0, 1.0, 1.0, c);
  c.threads = 3;
  const AuditReport three =
      audit_scalar_mechanism(laplace_mechanism(1.0), 0.0, 1.0, 1.0, c);
  EXPECT_EQ(one.epsilon_hat, three.epsilon_hat);
  EXPECT_EQ(one.ci_low, three.ci_low);
  EXPECT_EQ(one.bins_used, three.bins_used);
}

TEST(PostProcessingTest, MergingOutcomesNeverRaisesEstimate) {
  AuditConfig c = AuditConfig::scalar_default();
  c.n_bins = 20;
  c.range_lo = -3.0;
  c.range_hi = 4.0;
  const auto a = laplace_histogram(0.0, 1.0, c, 1);
  const auto b = laplace_histogram(1.0, 1.0, c, 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_GE(std::min(a[i], b[i]), c.min_count);
  }
  const double raw = estimate_from_counts(a, b, 1.0, c).epsilon_hat;
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int groups = 2 + trial % 5;
    std::uniform_int_distribution<int> pick(0, groups - 1);
    std::vector<int> f(a.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      f[i] = i < static_cast<std::size_t>(groups) ? static_cast<int>(i)
                                                  : pick(gen);
    }
    std::vector<std::int64_t> fa(groups, 0);
    std::vector<std::int64_t> fb(groups, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      fa[f[i]] += a[i];
      fb[f[i]] += b[i];
    }
    EXPECT_LE(estimate_from_counts(fa, fb, 1.0, c).epsilon_hat, raw + 1e-12);
  }
}

TEST(CompositionTest, PairOfReleasesStaysWithinTwiceEpsilon) {
  AuditConfig c = AuditConfig::scalar_default();
  c.n_bins = 6;
  c.range_lo = -2.0;
  c.range_hi = 3.0;
  const ScalarMechanism m = laplace_mechanism(1.0);
  std::vector<std::int64_t> a(36, 0);
  std::vector<std::int64_t> b(36, 0);
  RngStream sa = derive_stream(3, 1);
  RngStream sb = derive_stream(3, 2);
  for (std::int64_t i = 0; i < c.trials; ++i) {
    ++a[scalar_bin(m(0.0, sa), c) * 6 + scalar_bin(m(0.0, sa), c)];
    ++b[scalar_bin(m(1.0, sb), c) * 6 + scalar_bin(m(1.0, sb), c)];
  }
  const AuditReport r = estimate_from_counts(a, b, 2.0, c);
  EXPECT_LE(r.ci_low, 2.0);
  EXPECT_LE(r.epsilon_hat, 2.1);
  EXPECT_GT(r.epsilon_hat, 1.0);
}

TEST(SequenceHistogramTest, DeterministicPolicyHasOneSequence) {
  const AuditConfig c = AuditConfig::sequence_default();
  const auto h = arm_sequence_histogram("ucb1", two_arms(6, 2.0), kTape, c, 1);
  ASSERT_EQ(h.size(), 64u);
  // Arms 0, 1, 0, 0, 0, 1 with round 1 as the most significant bit.
  EXPECT_EQ(h[0b010001], c.trials);
}

TEST(SequenceAuditTest, NonPrivateBaselineIsUnbounded) {
  const AuditReport r =
      audit_bandit_global("ucb1", two_arms(6, 2.0), kTape, kTapePrime,
                          AuditConfig::sequence_default());
  EXPECT_TRUE(r.unbounded());
  EXPECT_EQ(r.verdict, AuditVerdict::kViolationSuspected);
}

TEST(SequenceAuditTest, NoiselessNcbWithShortExplorationIsUnbounded) {
  const AuditReport r =
      audit_bandit_global("ncb", two_arms(6, 2.0, 0.01), kTape, kTapePrime,
                          AuditConfig::sequence_default());
  EXPECT_TRUE(r.unbounded());
}

TEST(SequenceAuditTest, GdpNcbIsConsistent) {
  const AuditReport r =
      audit_bandit_global("gdp_ncb", two_arms(6, 2.0), kTape, kTapePrime,
                          AuditConfig::sequence_default());
  EXPECT_EQ(r.verdict, AuditVerdict::kConsistent);
  EXPECT_FALSE(r.unbounded());
  EXPECT_EQ(r.epsilon_target, 2.0);
  EXPECT_EQ(r.trials, 200000);
}

TEST(SequenceAuditTest, Errors) {
  const AuditConfig c = AuditConfig::sequence_default();
  EXPECT_THROW(
      audit_bandit_global("gdp_ncb", two_arms(6, 2.0), kTape, kTape, c),
      DomainError);
  const ReplayTape far({0, 1, 1, 1, 0, 1});
  EXPECT_THROW(audit_bandit_global("gdp_ncb", two_arms(6, 2.0), kTape, far, c),
               DomainError);
  PolicyParams three = two_arms(6, 2.0);
  three.k = 3;
  EXPECT_THROW(audit_bandit_global("gdp_ncb", three, kTape, kTapePrime, c),
               DomainError);
  const ReplayTape long_a(std::vector<double>(9, 1.0));
  std::vector<double> b(9, 1.0);
  b[0] = 0.0;
  const ReplayTape long_b(b);
  EXPECT_THROW(
      audit_bandit_global("gdp_ncb", two_arms(9, 2.0), long_a, long_b, c),
      DomainError);
  EXPECT_THROW(
      audit_bandit_global("gdp_ncb", two_arms(5, 2.0), kTape, kTapePrime, c),
      DomainError);
}

TEST(AuditJsonTest, WritesInfinityAsString) {
  AuditReport r;
  r.epsilon_hat = r.ci_low = r.ci_high =
      std::numeric_limits<double>::infinity();
  r.epsilon_target = 2.0;
  r.verdict = AuditVerdict::kViolationSuspected;
  r.mechanism = "ucb1";
  const auto j = nlohmann::json::parse(audit_report_json(r));
  EXPECT_EQ(j["epsilon_hat"], "inf");
  EXPECT_EQ(j["verdict"], "violation_suspected");
  EXPECT_EQ(j["epsilon_target"], 2.0);
}

}  // namespace
}  // namespace dpncb
