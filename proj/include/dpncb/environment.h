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

#ifndef DPNCB_ENVIRONMENT_H_
#define DPNCB_ENVIRONMENT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpncb/rng.h"

namespace dpncb {

enum class ArmKind { kBernoulli, kBeta, kTwoPoint, kUniform01, kConstant };

std::string_view arm_kind_name(ArmKind kind);

// One reward distribution on [0, 1]. The analytic mean is computed at
// construction and is the value every regret computation uses.
//
// Parameters by kind:
//   bernoulli: {p}          (p may be supplied in log space, see bernoulli_log)
//   beta:      {a, b}
//   two_point: {lo, hi, p}  reward hi with probability p, lo otherwise
//   uniform01: {}
//   constant:  {value}
class ArmSpec {
 public:
  static ArmSpec bernoulli(double p);
  // Bernoulli arm whose mean is given by its natural log. Used when the mean
  // underflows double precision; sampling treats means below 1e-300 as 0.
  static ArmSpec bernoulli_log(double log_p);
  static ArmSpec beta(double a, double b);
  static ArmSpec two_point(double lo, double hi, double p);
  static ArmSpec uniform01();
  static ArmSpec constant(double value);

  ArmKind kind() const { return kind_; }
  std::span<const double> params() const {
    return std::span<const double>(params_.data(), num_params_);
  }
  // Analytic mean; may be 0.0 when it underflows (see log_mean()).
  double mean() const { return mean_; }
  double log_mean() const { return log_mean_; }

  // One draw in [0, 1].
  double sample(RngStream& stream) const;

 private:
  ArmSpec(ArmKind kind, std::array<double, 3> params, std::size_t num_params,
          double mean, double log_mean);

  ArmKind kind_;
  std::array<double, 3> params_;
  std::size_t num_params_;
  double mean_;
  double log_mean_;
};

double true_mean(const ArmSpec& spec);

// A k-armed stochastic bandit. Immutable; safe to share across runs.
class BanditInstance {
 public:
  // Throws ConfigError when k < 2.
  explicit BanditInstance(std::vector<ArmSpec> arms);

  std::size_t num_arms() const { return arms_.size(); }
  const std::vector<ArmSpec>& arms() const { return arms_; }
  const ArmSpec& arm(std::size_t i) const;
  double mu_star() const { return mu_star_; }
  double log_mu_star() const { return log_mu_star_; }
  std::size_t best_arm() const { return best_arm_; }
  // ln(mean) per arm, exact even when the mean is below double range.
  const std::vector<double>& log_means() const { return log_means_; }

 private:
  std::vector<ArmSpec> arms_;
  std::vector<double> log_means_;
  double mu_star_;
  double log_mu_star_;
  std::size_t best_arm_;
};

// Throws IndexError when arm >= k.
double sample_reward(const BanditInstance& instance, std::size_t arm,
                     RngStream& stream);

// Two Bernoulli arms, ln(mu_1) = -T(1 + ln 2) (that is mu_1 = (2e)^-T, kept
// in log space) and mu_2 = 1.
BanditInstance adversarial_instance(std::int64_t horizon);
// 50 Bernoulli arms with means drawn from Unif(0.005, 1).
BanditInstance bern50_instance(std::uint64_t seed);
// 50 arms with means drawn from Unif(0.005, 1); the drawn value picks the
// distribution: >= 0.75 Bernoulli(value), [0.5, 0.75) Beta(4, 1),
// [0.25, 0.5) two-point {0.4, 1} with p = 1/2, below 0.25 Unif(0, 1). The
// arm's true mean is the chosen distribution's analytic mean, not the draw.
BanditInstance mixed50_instance(std::uint64_t seed);

// Dispatch by preset name: "adversarial" takes the horizon, "bern50" and
// "mixed50" take the seed. Throws ConfigError on an unknown name.
BanditInstance make_figure_instance(std::string_view preset,
                                    std::uint64_t horizon_or_seed);

// The arm kind mixed50 assigns to a drawn mean.
ArmSpec mixed50_arm_for(double drawn_mean);

// A fixed reward sequence X_1..X_T used to replay neighboring inputs.
class ReplayTape {
 public:
  // Throws DomainError when an entry is outside [0, 1].
  explicit ReplayTape(std::vector<double> rewards);
  std::size_t size() const { return rewards_.size(); }
  const std::vector<double>& rewards() const { return rewards_; }

 private:
  std::vector<double> rewards_;
};

// X_t for 1 <= t <= T; IndexError otherwise.
double replay_reward(const ReplayTape& tape, std::int64_t t);

// True when the tapes have equal length and differ in exactly one entry.
bool are_neighbors(const ReplayTape& a, const ReplayTape& b);

// Source of the raw reward delivered at round t for a pulled arm.
class RewardSource {
 public:
  virtual ~RewardSource() = default;
  virtual double pull(std::size_t arm, std::int64_t t) = 0;
};

class StochasticEnvironment final : public RewardSource {
 public:
  StochasticEnvironment(const BanditInstance& instance, RngStream stream)
      : instance_(&instance), stream_(std::move(stream)) {}
  double pull(std::size_t arm, std::int64_t t) override;

 private:
  const BanditInstance* instance_;
  RngStream stream_;
};

// Delivers X_t at round t whatever arm is pulled.
class ReplayEnvironment final : public RewardSource {
 public:
  explicit ReplayEnvironment(const ReplayTape& tape) : tape_(&tape) {}
  double pull(std::size_t arm, std::int64_t t) override;

 private:
  const ReplayTape* tape_;
};

}  // namespace dpncb

#endif  // DPNCB_ENVIRONMENT_H_
