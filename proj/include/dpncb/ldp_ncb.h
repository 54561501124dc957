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

#ifndef DPNCB_LDP_NCB_H_
#define DPNCB_LDP_NCB_H_

#include <cstdint>
#include <vector>

#include "dpncb/policy.h"

namespace dpncb {

struct LdpNcbState {
  explicit LdpNcbState(std::size_t k);

  Phase phase = Phase::kExploreI;
  std::vector<std::int64_t> n;
  // Running mean of privatized rewards; unclipped (possibly negative) in
  // Phase I, clipped to [0, 1] after every Phase-II update.
  std::vector<double> mu_tilde;
  std::int64_t t = 1;
  std::int64_t phase_one_rounds = 0;
};

// True when t > T or some arm satisfies ldp_arm_stops_phase1.
bool phase1_stop_ldp(const LdpNcbState& state, const PolicyParams& params);

// Locally private NCB. Only ever sees rewards privatized by the caller
// (reward_model() == kLocallyPrivate). Phase I pulls uniformly until the
// stopping rule fires; Phase II plays argmax ncb_ldp(mu_tilde, N) every
// round.
class LdpNcbPolicy final : public Policy {
 public:
  LdpNcbPolicy(PolicyParams params, RngStream stream);
  LdpNcbPolicy(PolicyParams params, RngStream stream, LdpNcbState state);

  std::string_view name() const override { return "ldp_ncb"; }
  RewardModel reward_model() const override {
    return RewardModel::kLocallyPrivate;
  }
  bool in_phase_two() const override {
    return state_.phase == Phase::kExploitII;
  }
  std::int64_t phase_one_rounds() const override {
    return state_.phase_one_rounds;
  }

  const LdpNcbState& state() const { return state_; }
  double index(std::size_t arm) const;

 protected:
  bool exhausted() const override { return state_.t > params_.horizon; }
  std::size_t do_select() override;
  void do_observe(std::size_t arm, double reward) override;

 private:
  void enter_phase_two();

  PolicyParams params_;
  RngStream stream_;
  LdpNcbState state_;
  std::vector<double> scratch_;
};

}  // namespace dpncb

#endif  // DPNCB_LDP_NCB_H_
