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

#ifndef DPNCB_GDP_NCB_H_
#define DPNCB_GDP_NCB_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "dpncb/policy.h"

namespace dpncb {

// The episode currently being played in Phase II.
struct GdpEpisode {
  std::size_t arm = 0;
  std::int64_t target_length = 0;  // 2 n_s
  std::int64_t pulls = 0;
  // Running mean seeded with the arm's Phase-I mean; earlier episodes are
  // forgotten.
  double mean = 0.0;
};

// A completed episode and the private mean it released.
struct GdpRelease {
  std::size_t arm = 0;
  std::int64_t length = 0;
  std::int64_t samples = 0;  // n_A = N1_A + length
  double pre_noise_mean = 0.0;
  double released = 0.0;  // after clipping
  std::int64_t end_round = 0;
};

struct GdpNcbState {
  explicit GdpNcbState(std::size_t k);

  Phase phase = Phase::kExploreI;
  std::vector<std::int64_t> n1;     // Phase-I pulls
  std::vector<double> mu_hat;       // Phase-I empirical means
  std::vector<double> mu_tilde;     // latest private means
  std::vector<std::int64_t> n_rel;  // samples behind mu_tilde
  std::vector<std::int64_t> n2;     // episode-length counters
  std::optional<GdpEpisode> episode;
  std::int64_t t = 1;  // next round
  std::int64_t phase_one_rounds = 0;
};

// True when t > T or some arm has N1 * mu_tilde >= the Phase-I threshold.
bool phase1_stop_gdp(const GdpNcbState& state, const PolicyParams& params);

// Globally private NCB with episodic releases.
//
// Phase I pulls arms uniformly and refreshes mu_tilde = mu_hat +
// Lap(ln T / (eps N1)) after each pull until some arm's N1 * mu_tilde
// reaches 1600 (c^2 ln T + (ln T)^2 / eps). Phase II plays episodes: the arm
// with the largest ncb_gdp(mu_tilde, n_rel) is pulled 2 n_s times, where n_s
// is the length of its previous episode (1 before the first), and a single
// clipped private mean with scale ln T / (eps n_A) is released at the end.
// Episodes cut off by the horizon release nothing.
//
// With private_release = false every noise term is dropped and epsilon is
// taken as +inf; this is the non-private "ncb" baseline.
class GdpNcbPolicy final : public Policy {
 public:
  GdpNcbPolicy(PolicyParams params, RngStream stream,
               bool private_release = true);
  // Continues from an explicit state.
  GdpNcbPolicy(PolicyParams params, RngStream stream, GdpNcbState state,
               bool private_release = true);

  std::string_view name() const override;
  bool in_phase_two() const override {
    return state_.phase == Phase::kExploitII;
  }
  std::int64_t phase_one_rounds() const override {
    return state_.phase_one_rounds;
  }

  const GdpNcbState& state() const { return state_; }
  const PolicyParams& params() const { return params_; }
  const std::vector<GdpRelease>& releases() const { return releases_; }
  // Index used at episode boundaries; +inf for arms with no samples.
  double index(std::size_t arm) const;

 protected:
  bool exhausted() const override { return state_.t > params_.horizon; }
  std::size_t do_select() override;
  void do_observe(std::size_t arm, double reward) override;

 private:
  void enter_phase_two();
  double noise(double samples);

  PolicyParams params_;
  RngStream stream_;
  bool private_;
  GdpNcbState state_;
  std::vector<GdpRelease> releases_;
};

}  // namespace dpncb

#endif  // DPNCB_GDP_NCB_H_
