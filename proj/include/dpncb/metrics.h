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

#ifndef DPNCB_METRICS_H_
#define DPNCB_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dpncb {

// Smallest per-round expected reward a curve may hold; smaller estimates
// are raised to it and counted in floored_rounds.
inline constexpr double kDefaultRewardFloor = 1e-300;

// One simulated run. Round t is entry t-1.
struct RunTrace {
  std::vector<std::uint32_t> arms;
  std::vector<double> rewards;    // as observed by the environment (raw)
  std::vector<double> log_means;  // ln mu of the pulled arm

  std::size_t horizon() const { return arms.size(); }
  void reserve(std::size_t n);
  void push(std::uint32_t arm, double reward, double log_mean);
};

// Per-round Monte-Carlo estimates of E[mu_{I_t}], kept as logarithms.
struct MeanRewardCurve {
  std::vector<double> log_values;
  std::int64_t runs = 0;
  std::int64_t floored_rounds = 0;
  double floor = kDefaultRewardFloor;

  std::int64_t horizon() const {
    return static_cast<std::int64_t>(log_values.size());
  }
};

// Streaming version of aggregate_runs: per-round log-sum-exp accumulators,
// so means far below double range (ln mu ~ -1700) average exactly. Runs
// must be added in a fixed order for bit-identical output.
class MeanRewardAccumulator {
 public:
  explicit MeanRewardAccumulator(std::size_t horizon);
  // Throws ShapeError on a horizon mismatch.
  void add_run(std::span<const double> log_means);
  std::int64_t runs() const { return runs_; }
  // Throws ShapeError when no run was added. floor <= 0 disables flooring.
  MeanRewardCurve finish(double floor = kDefaultRewardFloor) const;

 private:
  std::vector<double> max_log_;
  std::vector<double> scaled_sum_;
  std::int64_t runs_ = 0;
};

// (1/R) sum_r mu_{I_t^(r)} per round, in log space. Throws ShapeError for
// an empty list or mismatched horizons.
MeanRewardCurve aggregate_runs(std::span<const RunTrace> traces,
                               double floor = kDefaultRewardFloor);

// mu* - exp((1/T) sum_t ln E_t). Throws DomainError when a value is not
// strictly positive (NaN or -inf log).
double nash_regret(const MeanRewardCurve& curve, double mu_star);
// mu* - (1/T) sum_t E_t.
double average_regret(const MeanRewardCurve& curve, double mu_star);

// The same two metrics for a single run's own sequence of pulled means.
double run_nash_regret(std::span<const double> log_means, double mu_star);
double run_average_regret(std::span<const double> log_means, double mu_star);

enum class PrivacyModel { kGlobal, kLocal };

// Global: c^2 ln T / mu* + (ln T)^2 / (mu* eps).
// Local:  c^2 ln T / mu* + (ln T / (mu* eps))^2.
double exploration_budget_S(double mu_star, std::int64_t horizon,
                            double epsilon, PrivacyModel model, double c = 3.0);

struct PhaseOneStats {
  std::vector<std::int64_t> tau;  // Phase-I length per run
  double S = 0.0;
};

struct RegretReport {
  std::string algorithm;
  double epsilon = 0.0;  // +inf for non-private algorithms
  std::size_t k = 0;
  std::int64_t horizon = 0;
  std::int64_t runs = 0;
  double mu_star = 0.0;
  double nash_regret = 0.0;
  double nash_regret_std = 0.0;
  double average_regret = 0.0;
  double average_regret_std = 0.0;
  std::int64_t floored_rounds = 0;
  std::uint64_t seed = 0;
};

// Fills the regret fields from a curve and per-run regrets and checks
// nash_regret >= average_regret - 1e-9 (InvariantError otherwise).
void fill_regrets(RegretReport& report, const MeanRewardCurve& curve,
                  std::span<const double> per_run_nash,
                  std::span<const double> per_run_average);

// Sample standard deviation (n - 1 denominator); 0 for fewer than 2 values.
double sample_std(std::span<const double> values);

}  // namespace dpncb

#endif  // DPNCB_METRICS_H_
