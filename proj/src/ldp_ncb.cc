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

#include "dpncb/ldp_ncb.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dpncb/errors.h"

namespace dpncb {

LdpNcbState::LdpNcbState(std::size_t k) : n(k, 0), mu_tilde(k, 0.0) {}

bool phase1_stop_ldp(const LdpNcbState& state, const PolicyParams& params) {
  if (state.t > params.horizon) return true;
  for (std::size_t i = 0; i < state.n.size(); ++i) {
    if (ldp_arm_stops_phase1(static_cast<double>(state.n[i]), state.mu_tilde[i],
                             params)) {
      return true;
    }
  }
  return false;
}

LdpNcbPolicy::LdpNcbPolicy(PolicyParams params, RngStream stream)
    : LdpNcbPolicy(params, std::move(stream), LdpNcbState(params.k)) {}

LdpNcbPolicy::LdpNcbPolicy(PolicyParams params, RngStream stream,
                           LdpNcbState state)
    : params_(params),
      stream_(std::move(stream)),
      state_(std::move(state)),
      scratch_(params.k) {
  params_.validate();
  if (state_.n.size() != params_.k) {
    throw ConfigError("LDP-NCB state arm count does not match params");
  }
}

double LdpNcbPolicy::index(std::size_t arm) const {
  if (state_.n[arm] < 1) return std::numeric_limits<double>::infinity();
  return ncb_ldp(state_.mu_tilde[arm], static_cast<double>(state_.n[arm]),
                 params_);
}

std::size_t LdpNcbPolicy::do_select() {
  if (state_.phase == Phase::kExploreI) {
    return stream_.uniform_index(params_.k);
  }
  for (std::size_t i = 0; i < params_.k; ++i) scratch_[i] = index(i);
  return argmax_lowest(scratch_);
}

void LdpNcbPolicy::do_observe(std::size_t arm, double reward) {
  if (!std::isfinite(reward)) {
    throw DomainError("LDP-NCB expects a finite privatized reward");
  }
  const double n = static_cast<double>(++state_.n[arm]);
  state_.mu_tilde[arm] = (n - 1.0) / n * state_.mu_tilde[arm] + reward / n;
  ++state_.t;
  if (state_.phase == Phase::kExploitII) {
    state_.mu_tilde[arm] = std::clamp(state_.mu_tilde[arm], 0.0, 1.0);
    return;
  }
  ++state_.phase_one_rounds;
  if (state_.t <= params_.horizon &&
      ldp_arm_stops_phase1(n, state_.mu_tilde[arm], params_)) {
    enter_phase_two();
  }
}

void LdpNcbPolicy::enter_phase_two() {
  state_.phase = Phase::kExploitII;
  for (double& m : state_.mu_tilde) m = std::clamp(m, 0.0, 1.0);
}

}  // namespace dpncb
