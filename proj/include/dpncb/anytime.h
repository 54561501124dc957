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

#ifndef DPNCB_ANYTIME_H_
#define DPNCB_ANYTIME_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "dpncb/policy.h"

namespace dpncb {

enum class EpochFlag { kUniform, kDpNcb };

enum class InnerModel { kGlobal, kLocal };

struct AnytimeEpoch {
  int index = 1;                  // h, starting at 1
  std::int64_t window = 1;        // W_h
  std::int64_t prior_rounds = 0;  // R_h, rounds played before the epoch
  EpochFlag flag = EpochFlag::kUniform;
};

struct AnytimeState {
  std::int64_t window = 0;  // 0 until the first epoch opens
  EpochFlag flag = EpochFlag::kUniform;
  std::int64_t rounds_left_in_epoch = 0;
  std::int64_t rounds_played = 0;
};

// Horizon-free doubling wrapper. Epoch h has window W_h = 2^{h-1}; with
// probability 1/W^2 it pulls uniformly at random, otherwise it runs a fresh
// GDP-NCB or LDP-NCB instance with horizon W. params.horizon is ignored.
class AnytimePolicy final : public Policy {
 public:
  AnytimePolicy(InnerModel model, PolicyParams params, RngStream stream);

  std::string_view name() const override;
  RewardModel reward_model() const override {
    return model_ == InnerModel::kLocal ? RewardModel::kLocallyPrivate
                                        : RewardModel::kRaw;
  }
  bool in_phase_two() const override;

  const AnytimeState& state() const { return state_; }
  const std::vector<AnytimeEpoch>& epochs() const { return epochs_; }

 protected:
  bool exhausted() const override { return false; }
  std::size_t do_select() override;
  void do_observe(std::size_t arm, double reward) override;

 private:
  void open_epoch();

  InnerModel model_;
  PolicyParams params_;
  RngStream stream_;
  AnytimeState state_;
  std::unique_ptr<Policy> inner_;
  std::vector<AnytimeEpoch> epochs_;
};

}  // namespace dpncb

#endif  // DPNCB_ANYTIME_H_
