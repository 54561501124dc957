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

#include "dpncb/anytime.h"

#include "dpncb/gdp_ncb.h"
#include "dpncb/ldp_ncb.h"

namespace dpncb {

AnytimePolicy::AnytimePolicy(InnerModel model, PolicyParams params,
                             RngStream stream)
    : model_(model), params_(params), stream_(std::move(stream)) {
  params_.validate();
}

std::string_view AnytimePolicy::name() const {
  return model_ == InnerModel::kLocal ? "anytime_ldp" : "anytime_gdp";
}

bool AnytimePolicy::in_phase_two() const {
  return state_.flag == EpochFlag::kDpNcb && inner_ && inner_->in_phase_two();
}

void AnytimePolicy::open_epoch() {
  state_.window = state_.window == 0 ? 1 : 2 * state_.window;
  const double w = static_cast<double>(state_.window);
  state_.flag = stream_.uniform_open01() < 1.0 / (w * w) ? EpochFlag::kUniform
                                                         : EpochFlag::kDpNcb;
  state_.rounds_left_in_epoch = state_.window;

  AnytimeEpoch epoch;
  epoch.index = static_cast<int>(epochs_.size()) + 1;
  epoch.window = state_.window;
  epoch.prior_rounds = state_.rounds_played;
  epoch.flag = state_.flag;
  epochs_.push_back(epoch);

  inner_.reset();
  if (state_.flag == EpochFlag::kDpNcb) {
    PolicyParams inner_params = params_;
    inner_params.horizon = state_.window;
    RngStream inner_stream =
        stream_.fork(static_cast<std::uint64_t>(epoch.index));
    if (model_ == InnerModel::kLocal) {
      inner_ =
          std::make_unique<LdpNcbPolicy>(inner_params, std::move(inner_stream));
    } else {
      inner_ =
          std::make_unique<GdpNcbPolicy>(inner_params, std::move(inner_stream));
    }
  }
}

std::size_t AnytimePolicy::do_select() {
  if (state_.rounds_left_in_epoch == 0) open_epoch();
  if (state_.flag == EpochFlag::kUniform) {
    return stream_.uniform_index(params_.k);
  }
  return inner_->select_arm();
}

void AnytimePolicy::do_observe(std::size_t arm, double reward) {
  if (state_.flag == EpochFlag::kDpNcb) inner_->observe_reward(arm, reward);
  --state_.rounds_left_in_epoch;
  ++state_.rounds_played;
}

}  // namespace dpncb
