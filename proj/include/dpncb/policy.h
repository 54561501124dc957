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

#ifndef DPNCB_POLICY_H_
#define DPNCB_POLICY_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "dpncb/ncb_index.h"
#include "dpncb/rng.h"

namespace dpncb {

// What a policy expects to be fed in observe_reward().
enum class RewardModel {
  kRaw,             // the reward itself, in [0, 1]
  kLocallyPrivate,  // X_t + Lap(1/eps), privatized by the caller
};

enum class Phase { kExploreI, kExploitII };

// Select/observe interface shared by every algorithm. Calls must alternate:
// select_arm(), then observe_reward() for that same arm.
class Policy {
 public:
  virtual ~Policy() = default;

  // Throws StateError past the horizon or when the previous selection has
  // not been observed yet.
  std::size_t select_arm();
  // Throws StateError when `arm` is not the pending selection.
  void observe_reward(std::size_t arm, double reward);

  virtual std::string_view name() const = 0;
  virtual RewardModel reward_model() const { return RewardModel::kRaw; }
  // True while the policy plays index-based (Phase II) rounds. Baselines
  // without phases report false.
  virtual bool in_phase_two() const { return false; }
  // Rounds spent in uniform exploration so far; 0 for policies without a
  // uniform phase.
  virtual std::int64_t phase_one_rounds() const { return 0; }

 protected:
  virtual bool exhausted() const = 0;
  virtual std::size_t do_select() = 0;
  virtual void do_observe(std::size_t arm, double reward) = 0;

 private:
  std::optional<std::size_t> pending_;
};

// X + Lap(1/eps), applied on the user side before an LDP policy sees the
// reward. Consumes one uniform; eps = +inf returns x unchanged.
// Throws DomainError for x outside [0, 1] or eps <= 0.
double local_privatize(double x, double epsilon, RngStream& stream);

// Names accepted by make_policy.
std::span<const std::string_view> policy_names();
bool is_private_policy(std::string_view name);

// Builds a fresh policy: gdp_ncb, ldp_ncb, anytime_gdp, anytime_ldp, ncb,
// adap_ucb, ldp_ucb, ucb1. Throws ConfigError on an unknown name.
std::unique_ptr<Policy> make_policy(std::string_view name,
                                    const PolicyParams& params,
                                    RngStream stream);

}  // namespace dpncb

#endif  // DPNCB_POLICY_H_
