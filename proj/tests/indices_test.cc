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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "dpncb/errors.h"
#include "dpncb/gdp_ncb.h"
#include "dpncb/ldp_ncb.h"
#include "dpncb/ncb_index.h"

namespace dpncb {
namespace {

// Oracle values below come from tests/oracles/derived_values.py (mpmath,
// 50 digits).
constexpr double kRel = 1e-12;

PolicyParams params_for(std::int64_t horizon, double epsilon) {
  PolicyParams p;
  p.k = 2;
  p.horizon = horizon;
  p.epsilon = epsilon;
  return p;
}

void expect_rel(double actual, double expected) {
  EXPECT_NEAR(actual, expected, kRel * std::max(1.0, std::abs(expected)));
}

TEST(PolicyParamsTest, DefaultsAndValidation) {
  const PolicyParams p;
  EXPECT_EQ(p.c, 3.0);
  EXPECT_EQ(p.alpha, 3.1);
  PolicyParams bad = p;
  bad.epsilon = 0.0;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = p;
  bad.horizon = 0;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = p;
  bad.c = -1.0;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = p;
  bad.epsilon = std::numeric_limits<double>::infinity();
  EXPECT_NO_THROW(bad.validate());
}

TEST(NcbNonprivateTest, OracleValues) {
  EXPECT_EQ(ncb_nonprivate(0.0, 10, 100), 0.0);
  // T = e is not an integer horizon; evaluate the formula with ln T = 1 by
  // scaling n instead: 4 sqrt(0.25 ln T / n) with n = 100 ln T.
  expect_rel(ncb_nonprivate(0.25, 100.0 * std::log(7.0), 7), 0.45);
  expect_rel(ncb_nonprivate(1.0, 256.0 * std::log(50.0), 50), 1.25);
}

TEST(NcbNonprivateTest, ErrorsAndMonotonicity) {
  EXPECT_THROW(ncb_nonprivate(-0.1, 10, 100), DomainError);
  EXPECT_THROW(ncb_nonprivate(0.1, 0.5, 100), DomainError);
  EXPECT_THROW(ncb_nonprivate(0.1, 10, 1), DomainError);
  double prev = -1.0;
  for (double mu = 0.0; mu <= 1.0; mu += 0.05) {
    const double v = ncb_nonprivate(mu, 50, 1000);
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(NcbGdpTest, OracleValues) {
  const PolicyParams p = params_for(1000, 1.0);
  expect_rel(ncb_gdp(0.0, 100, p), 3.2874911371330471446);
  expect_rel(ncb_gdp(0.5, 100, p), 5.3644476680601267382);
}

TEST(NcbGdpTest, InfiniteEpsilonDropsPrivacyTerms) {
  const PolicyParams p =
      params_for(1000, std::numeric_limits<double>::infinity());
  const double log_t = std::log(1000.0);
  for (double mu : {0.0, 0.3, 1.0}) {
    expect_rel(ncb_gdp(mu, 40, p), mu + 6.0 * std::sqrt(2.0 * mu * log_t / 40));
  }
}

TEST(NcbGdpTest, RejectsUnclippedOrEmptyInputs) {
  const PolicyParams p = params_for(1000, 1.0);
  EXPECT_THROW(ncb_gdp(-0.01, 10, p), DomainError);
  EXPECT_THROW(ncb_gdp(1.01, 10, p), DomainError);
  EXPECT_THROW(ncb_gdp(0.5, 0, p), DomainError);
}

TEST(NcbLdpTest, OracleValues) {
  const PolicyParams p = params_for(1000, 1.0);
  expect_rel(ncb_ldp(0.0, 100, p), 3.8602828979979175817);
  expect_rel(ncb_ldp(0.5, 100, p), 5.9372394289249971753);
}

TEST(NcbLdpTest, ThirdTermShrinksFourfoldAtSixteenN) {
  PolicyParams p = params_for(1000, 1.0);
  p.c = 0.0;  // isolates terms 1 and 3 at mu = 0
  const double at_n = ncb_ldp(0.0, 100, p);
  const double at_16n = ncb_ldp(0.0, 1600, p);
  expect_rel(at_n / at_16n, 4.0);
}

TEST(Phase1GdpTest, ThresholdOracle) {
  expect_rel(gdp_phase1_threshold(params_for(1000, 0.2)),
             481208.33997178743031);
}

TEST(Phase1GdpTest, Predicate) {
  const PolicyParams p = params_for(1000, 0.2);
  const double thr = gdp_phase1_threshold(p);
  EXPECT_TRUE(gdp_arm_stops_phase1(thr, 1.0, p));
  EXPECT_FALSE(gdp_arm_stops_phase1(thr, std::nextafter(1.0, 0.0), p));

  GdpNcbState state(3);
  state.n1 = {10, 20, 30};
  state.mu_tilde = {-0.3, 0.0, -1.0};
  state.t = 61;
  EXPECT_FALSE(phase1_stop_gdp(state, p));
  state.t = 1001;
  EXPECT_TRUE(phase1_stop_gdp(state, p));
}

TEST(Phase1LdpTest, SidesOracle) {
  const PolicyParams p = params_for(1000, 1.0);
  const LdpStopSides sides = ldp_phase1_sides(1e6, 0.9, p);
  expect_rel(sides.lhs, 900000.0);
  expect_rel(sides.rhs, 198642.56736645705232);
  EXPECT_TRUE(ldp_arm_stops_phase1(1e6, 0.9, p));
}

TEST(Phase1LdpTest, FirstOperandGuardsDenominator) {
  const PolicyParams p = params_for(1000, 1.0);
  // mu below (1/eps) sqrt(8 alpha ln T / N): rule cannot fire, no division.
  const double n = 100.0;
  const double bound = std::sqrt(8.0 * 3.1 * std::log(1000.0) / n);
  EXPECT_TRUE(std::isinf(ldp_phase1_sides(n, bound, p).rhs));
  EXPECT_FALSE(ldp_arm_stops_phase1(n, bound, p));
  EXPECT_FALSE(ldp_arm_stops_phase1(n, -2.0, p));

  LdpNcbState state(2);
  state.n = {100, 100};
  state.mu_tilde = {0.5, 0.9};
  state.t = 201;
  EXPECT_FALSE(phase1_stop_ldp(state, p));
  state.t = 1001;
  EXPECT_TRUE(phase1_stop_ldp(state, p));
}

TEST(ArgmaxTest, LowestIndexWinsTies) {
  EXPECT_EQ(argmax_lowest(std::vector<double>{1.0, 3.0, 3.0}), 1u);
  EXPECT_EQ(argmax_lowest(std::vector<double>{2.0, 2.0}), 0u);
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(argmax_lowest(std::vector<double>{5.0, inf, inf}), 1u);
  EXPECT_EQ(argmax_lowest(std::vector<double>{std::nan(""), 0.1}), 1u);
}

TEST(ArgmaxTest, InvariantUnderMonotoneTransform) {
  const std::vector<double> v = {0.3, 1.7, 0.9, 1.7, 0.05};
  std::vector<double> w;
  for (double x : v) w.push_back(std::exp(3.0 * x) - 7.0);
  EXPECT_EQ(argmax_lowest(v), argmax_lowest(w));
}

}  // namespace
}  // namespace dpncb
