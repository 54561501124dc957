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

#include "dpncb/gdp_ncb.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dpncb/errors.h"
#include "dpncb/laplace.h"

namespace dpncb {

GdpNcbState::GdpNcbState(std::size_t k)
    : n1(k, 0), mu_hat(k, 0.0), mu_tilde(k, 0.0), n_rel(k, 0), n2(k, 0) {}

bool phase1_stop_gdp(const GdpNcbState& state, const PolicyParams& params) {
  if (state.t > params.horizon) return true;
  for (std::size_t i = 0; i < state.n1.size(); ++i) {
    if (gdp_arm_stops_phase1(static_cast<double>(state.n1[i]),
                             state.mu_tilde[i], params)) {
      return true;
    }
  }
  return false;
}

GdpNcbPolicy::GdpNcbPolicy(PolicyParams params, RngStream stream,
                           bool private_release)
    : GdpNcbPolicy(params, std::move(stream), GdpNcbState(params.k),
                   private_release) {}

GdpNcbPolicy::GdpNcbPolicy(PolicyParams params, RngStream stream,
                           GdpNcbState state, bool private_release)
    : params_(params),
      stream_(std::move(stream)),
      private_(private_release),
      state_(std::move(state)) {
  if (!private_) params_.epsilon = std::numeric_limits<double>::infinity();
  params_.validate();
  if (state_.n1.size() != params_.k) {
    throw ConfigError("GDP-NCB state has " + std::to_string(state_.n1.size()) +
                      " arms, params say " + std::to_string(params_.k));
  }
}

std::string_view GdpNcbPolicy::name() const {
  return private_ ? "gdp_ncb" : "ncb";
}

double GdpNcbPolicy::index(std::size_t arm) const {
  const auto n = state_.n_rel[arm];
  if (n < 1) return std::numeric_limits<double>::infinity();
  return ncb_gdp(state_.mu_tilde[arm], static_cast<double>(n), params_);
}

double GdpNcbPolicy::noise(double samples) {
  if (!private_) return 0.0;
  const double scale = params_.log_horizon() / (params_.epsilon * samples);
  if (!(scale > 0.0)) return 0.0;  // T = 1: ln T = 0
  return sample_laplace(stream_, LaplaceScale(scale));
}

std::size_t GdpNcbPolicy::do_select() {
  if (state_.phase == Phase::kExploreI) {
    return stream_.uniform_index(params_.k);
  }
  if (!state_.episode) {
    std::vector<double> indices(params_.k);
    for (std::size_t i = 0; i < params_.k; ++i) indices[i] = index(i);
    const std::size_t arm = argmax_lowest(indices);
    GdpEpisode episode;
    episode.arm = arm;
    episode.target_length = 2 * state_.n2[arm];
    episode.mean = state_.mu_hat[arm];
    state_.n2[arm] = 0;
    state_.episode = episode;
  }
  return state_.episode->arm;
}

void GdpNcbPolicy::do_observe(std::size_t arm, double reward) {
  if (!(reward >= 0.0 && reward <= 1.0)) {
    throw DomainError("GDP-NCB expects raw rewards in [0, 1], got " +
                      std::to_string(reward));
  }
  if (state_.phase == Phase::kExploreI) {
    const double n = static_cast<double>(++state_.n1[arm]);
    state_.mu_hat[arm] = (n - 1.0) / n * state_.mu_hat[arm] + reward / n;
    state_.mu_tilde[arm] = state_.mu_hat[arm] + noise(n);
    ++state_.t;
    ++state_.phase_one_rounds;
    // Only this arm changed, and no arm crossed before this round.
    if (state_.t <= params_.horizon &&
        gdp_arm_stops_phase1(n, state_.mu_tilde[arm], params_)) {
      enter_phase_two();
    }
    return;
  }

  GdpEpisode& episode = *state_.episode;
  const std::int64_t n2 = ++state_.n2[arm];
  const double n_a = static_cast<double>(n2 + state_.n1[arm]);
  episode.mean = (n_a - 1.0) / n_a * episode.mean + reward / n_a;
  ++episode.pulls;
  ++state_.t;
  if (episode.pulls == episode.target_length) {
    GdpRelease release;
    release.arm = arm;
    release.length = episode.pulls;
    release.samples = static_cast<std::int64_t>(n_a);
    release.pre_noise_mean = episode.mean;
    release.released = std::clamp(episode.mean + noise(n_a), 0.0, 1.0);
    release.end_round = state_.t - 1;
    state_.mu_tilde[arm] = release.released;
    state_.n_rel[arm] = release.samples;
    releases_.push_back(release);
    state_.episode.reset();
  }
}

void GdpNcbPolicy::enter_phase_two() {
  state_.phase = Phase::kExploitII;
  for (std::size_t i = 0; i < params_.k; ++i) {
    state_.n2[i] = 1;
    state_.mu_tilde[i] = std::clamp(state_.mu_tilde[i], 0.0, 1.0);
    state_.n_rel[i] = state_.n1[i];
  }
}

}  // namespace dpncb
