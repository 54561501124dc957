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

// Comparison baselines. These are simplified stand-ins that reproduce the
// qualitative behavior of the published algorithms they are named after;
// their constants are not the published ones.

#ifndef DPNCB_BASELINES_H_
#define DPNCB_BASELINES_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "dpncb/policy.h"

namespace dpncb {

// Non-private UCB1: each arm once in index order, then
// argmax mu_hat + sqrt(2 ln t / n).
class Ucb1Policy final : public Policy {
 public:
  explicit Ucb1Policy(PolicyParams params);
  std::string_view name() const override { return "ucb1"; }

 protected:
  bool exhausted() const override { return t_ > params_.horizon; }
  std::size_t do_select() override;
  void do_observe(std::size_t arm, double reward) override;

 private:
  PolicyParams params_;
  std::vector<std::int64_t> n_;
  std::vector<double> mean_;
  std::vector<double> scratch_;
  std::int64_t t_ = 1;
};

// Globally private UCB with doubling episodes and forgetting. Each arm's
// first episode has length 1 (arms in index order); later episodes double
// the arm's previous length. Only the last episode's rewards enter its
// private mean mu_tilde = mean + Lap(1 / (eps n)), n the episode length.
// Index at an episode boundary: mu_tilde + sqrt(ln t / n) + ln t / (eps n).
class AdapUcbPolicy final : public Policy {
 public:
  AdapUcbPolicy(PolicyParams params, RngStream stream);
  std::string_view name() const override { return "adap_ucb"; }

 protected:
  bool exhausted() const override { return t_ > params_.horizon; }
  std::size_t do_select() override;
  void do_observe(std::size_t arm, double reward) override;

 private:
  struct Episode {
    std::size_t arm = 0;
    std::int64_t length = 0;
    std::int64_t pulls = 0;
    double sum = 0.0;
  };

  PolicyParams params_;
  RngStream stream_;
  std::vector<std::int64_t> last_length_;
  std::vector<double> mu_tilde_;
  std::vector<double> scratch_;
  std::optional<Episode> episode_;
  std::int64_t t_ = 1;
};

// Locally private UCB over privatized rewards: each arm once, then
// argmax mu_tilde + (1 + 1/eps) sqrt(2 ln t / n).
class LdpUcbPolicy final : public Policy {
 public:
  explicit LdpUcbPolicy(PolicyParams params);
  std::string_view name() const override { return "ldp_ucb"; }
  RewardModel reward_model() const override {
    return RewardModel::kLocallyPrivate;
  }

 protected:
  bool exhausted() const override { return t_ > params_.horizon; }
  std::size_t do_select() override;
  void do_observe(std::size_t arm, double reward) override;

 private:
  PolicyParams params_;
  std::vector<std::int64_t> n_;
  std::vector<double> mean_;
  std::vector<double> scratch_;
  std::int64_t t_ = 1;
};

}  // namespace dpncb

#endif  // DPNCB_BASELINES_H_
