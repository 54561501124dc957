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

// Empirical privacy estimation by neighboring-input replay.
//
// The estimate is a lower bound on the privacy loss: a "consistent" verdict
// means the audit failed to refute the target, never that the mechanism is
// private.

#ifndef DPNCB_AUDIT_H_
#define DPNCB_AUDIT_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpncb/environment.h"
#include "dpncb/ncb_index.h"
#include "dpncb/rng.h"

namespace dpncb {

inline constexpr int kMaxAuditHorizon = 8;

enum class OutcomeSpace { kScalarBins, kArmSequences };

struct AuditConfig {
  std::int64_t trials = 1'000'000;
  OutcomeSpace outcome_space = OutcomeSpace::kScalarBins;
  int n_bins = 100;
  double range_lo = -8.0;
  double range_hi = 9.0;
  std::int64_t min_count = 2500;
  double slack = 0.0;
  double confidence = 0.95;
  std::uint64_t seed = 1;
  int threads = 1;

  static AuditConfig scalar_default();
  static AuditConfig sequence_default();

  // Throws ConfigError on trials below 1e4 (scalar) / 1e5 (sequences),
  // min_count < 5, an empty range, or confidence outside (0, 1).
  void validate() const;
};

enum class AuditVerdict { kConsistent, kViolationSuspected };

std::string_view verdict_name(AuditVerdict verdict);

struct AuditReport {
  double epsilon_hat = 0.0;  // +inf when an outcome is seen on one side only
  double ci_low = 0.0;
  double ci_high = 0.0;
  double epsilon_target = 0.0;
  AuditVerdict verdict = AuditVerdict::kConsistent;
  std::int64_t trials = 0;
  std::int64_t bins_used = 0;
  std::string mechanism;

  bool unbounded() const;
};

// Core estimator over two aligned outcome histograms. Outcomes with both
// counts >= min_count enter the ratio; an outcome with >= min_count on one
// side and none on the other makes epsilon_hat +inf. The interval is a
// simultaneous (Bonferroni) normal interval on the per-outcome log ratios.
// Throws AuditError when either histogram has all mass in one outcome or no
// outcome qualifies, ShapeError when the sizes differ.
AuditReport estimate_from_counts(std::span<const std::int64_t> counts,
                                 std::span<const std::int64_t> counts_prime,
                                 double epsilon_target,
                                 const AuditConfig& config);

// A randomized map [0,1] -> R.
using ScalarMechanism = std::function<double(double, RngStream&)>;

ScalarMechanism laplace_mechanism(double epsilon);

// Bin index of `value` on [lo, hi) with n_bins equal bins; values outside
// are clamped into the edge bins.
int scalar_bin(double value, const AuditConfig& config);

// Throws DomainError unless x, x' are in [0, 1].
AuditReport audit_scalar_mechanism(const ScalarMechanism& mechanism, double x,
                                   double x_prime, double epsilon_target,
                                   const AuditConfig& config);

// Histogram of the arm sequence (encoded base 2, round 1 most significant)
// over `trials` runs of the policy on the replay tape.
std::vector<std::int64_t> arm_sequence_histogram(std::string_view policy_name,
                                                 const PolicyParams& params,
                                                 const ReplayTape& tape,
                                                 const AuditConfig& config,
                                                 std::uint64_t tape_tag);

// Throws DomainError for non-neighboring tapes, k != 2, or T outside
// [1, 8] / different from the tape length.
AuditReport audit_bandit_global(std::string_view policy_name,
                                const PolicyParams& params,
                                const ReplayTape& tape,
                                const ReplayTape& tape_prime,
                                const AuditConfig& config);

std::string audit_report_json(const AuditReport& report);

}  // namespace dpncb

#endif  // DPNCB_AUDIT_H_
