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

// Config-driven Monte-Carlo experiments.
//
// Every run of cell (algorithm, eps, T) uses the stream
// derive_stream(seed, cell_hash ^ run) and its forks 1 (environment),
// 2 (policy) and 3 (local privatizer), so results depend only on the
// config, never on the thread count.

#ifndef DPNCB_EXPERIMENT_H_
#define DPNCB_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpncb/environment.h"
#include "dpncb/metrics.h"
#include "dpncb/policy.h"

namespace dpncb {

inline constexpr std::string_view kCsvHeader =
    "algorithm,epsilon,k,T,runs,nash_regret,nash_regret_std,avg_regret,"
    "avg_regret_std,floored_rounds,seed";

struct AlgorithmSpec {
  std::string name;
  std::optional<double> c;
  std::optional<double> alpha;
};

struct InstanceSpec {
  // "adversarial", "bern50", "mixed50", or empty for explicit arms.
  std::string preset;
  // Seed for drawn instances; the master seed when unset.
  std::optional<std::uint64_t> seed;
  std::vector<ArmSpec> arms;
};

struct ExperimentConfig {
  std::string name = "experiment";
  InstanceSpec instance;
  std::vector<AlgorithmSpec> algorithms;
  std::vector<double> epsilons;
  std::vector<std::int64_t> horizons;
  std::int64_t runs = 50;
  std::uint64_t seed = 1;
  std::string output_dir = ".";
  int threads = 1;
  double floor = kDefaultRewardFloor;

  // Throws ConfigError on unknown names, runs < 1, a non-increasing T grid,
  // non-positive eps, or a private algorithm without epsilons.
  void validate() const;

  // Throws ParseError on malformed JSON, ConfigError on bad values.
  static ExperimentConfig from_json(std::string_view text);
  std::string to_json() const;
};

// Throws IoError when the file cannot be read.
ExperimentConfig load_config(const std::string& path);

std::span<const std::string_view> figure_preset_names();

// fig_a ... fig_f. Throws ConfigError for other names.
ExperimentConfig figure_preset(std::string_view name);

// The instance for horizon T; adversarial instances depend on T.
BanditInstance build_instance(const InstanceSpec& spec, std::int64_t horizon,
                              std::uint64_t master_seed);

PolicyParams policy_params_for(const AlgorithmSpec& algorithm, std::size_t k,
                               std::int64_t horizon, double epsilon);

struct RunOutcome {
  RunTrace trace;
  std::int64_t tau = 0;  // Phase-I rounds
  std::vector<std::int64_t> phase_two_pulls;
};

// Plays `horizon` rounds. Rewards come from `source`; policies that take
// locally private rewards receive X_t + Lap(1/eps) drawn from `privatizer`
// and never the raw value. Mean logs come from `instance`.
RunOutcome simulate_run(Policy& policy, RewardSource& source,
                        const BanditInstance& instance, std::int64_t horizon,
                        double epsilon, RngStream& privatizer);

std::uint64_t cell_hash(std::string_view algorithm, double epsilon,
                        std::int64_t horizon);

struct CellResult {
  RegretReport report;
  std::vector<std::int64_t> tau;
  // phase_two_pulls[run][arm]
  std::vector<std::vector<std::int64_t>> phase_two_pulls;
};

CellResult run_cell(const ExperimentConfig& config,
                    const AlgorithmSpec& algorithm, double epsilon,
                    std::int64_t horizon, const BanditInstance& instance);

// Cells in order algorithm, then eps (one "inf" cell for non-private
// algorithms), then T.
std::vector<CellResult> run_cells(const ExperimentConfig& config);

std::string format_number(double value);
std::string regret_csv(std::span<const CellResult> cells);

struct ExperimentResult {
  std::vector<CellResult> cells;
  std::string csv;
  std::string csv_path;  // empty when nothing was written
};

// Runs every cell and writes <output_dir>/<name>.csv when write_files is
// set. Throws IoError when the directory is not writable.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                bool write_files = true);

// Writes `text` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::string& path, std::string_view text);

}  // namespace dpncb

#endif  // DPNCB_EXPERIMENT_H_
