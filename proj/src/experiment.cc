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

#include "dpncb/experiment.h"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "dpncb/errors.h"
#include "json.hpp"

namespace dpncb {
namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array<std::string_view, 6> kFigurePresets = {
    "fig_a", "fig_b", "fig_c", "fig_d", "fig_e", "fig_f"};

constexpr std::uint64_t kEnvFork = 1;
constexpr std::uint64_t kPolicyFork = 2;
constexpr std::uint64_t kPrivatizerFork = 3;

bool known_policy(std::string_view name) {
  const auto names = policy_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return j.at(key).get<T>();
}

ArmSpec arm_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "bernoulli") {
    if (j.contains("log_p")) return ArmSpec::bernoulli_log(j.at("log_p"));
    return ArmSpec::bernoulli(j.at("p").get<double>());
  }
  if (kind == "beta") return ArmSpec::beta(j.at("a"), j.at("b"));
  if (kind == "two_point") {
    return ArmSpec::two_point(j.at("lo"), j.at("hi"), j.at("p"));
  }
  if (kind == "uniform01") return ArmSpec::uniform01();
  if (kind == "constant") return ArmSpec::constant(j.at("value"));
  throw ConfigError("unknown arm kind '" + kind + "'");
}

nlohmann::ordered_json arm_to_json(const ArmSpec& arm) {
  nlohmann::ordered_json j;
  j["kind"] = arm_kind_name(arm.kind());
  const auto p = arm.params();
  switch (arm.kind()) {
    case ArmKind::kBernoulli:
      if (p[0] < 1e-300) {
        j["log_p"] = arm.log_mean();
      } else {
        j["p"] = p[0];
      }
      break;
    case ArmKind::kBeta:
      j["a"] = p[0];
      j["b"] = p[1];
      break;
    case ArmKind::kTwoPoint:
      j["lo"] = p[0];
      j["hi"] = p[1];
      j["p"] = p[2];
      break;
    case ArmKind::kUniform01:
      break;
    case ArmKind::kConstant:
      j["value"] = p[0];
      break;
  }
  return j;
}

ExperimentConfig preset_base(std::string_view name, std::string preset) {
  ExperimentConfig config;
  config.name = std::string(name);
  config.instance.preset = std::move(preset);
  config.epsilons = {0.2};
  config.horizons = {10'000, 30'000, 100'000, 300'000};
  config.runs = 50;
  return config;
}

std::vector<AlgorithmSpec> algorithms(
    std::initializer_list<std::string_view> names) {
  std::vector<AlgorithmSpec> out;
  for (auto n : names) out.push_back(AlgorithmSpec{std::string(n), {}, {}});
  return out;
}

// One run's contribution to a cell, produced on a worker thread.
struct RunSummary {
  std::vector<double> log_means;
  double nash = 0.0;
  double average = 0.0;
  std::int64_t tau = 0;
  std::vector<std::int64_t> phase_two_pulls;
};

RunSummary run_one(const ExperimentConfig& config,
                   const AlgorithmSpec& algorithm, double epsilon,
                   std::int64_t horizon, const BanditInstance& instance,
                   std::uint64_t hash, std::int64_t run) {
  const RngStream root =
      derive_stream(config.seed, hash ^ static_cast<std::uint64_t>(run));
  const PolicyParams params =
      policy_params_for(algorithm, instance.num_arms(), horizon, epsilon);
  auto policy = make_policy(algorithm.name, params, root.fork(kPolicyFork));
  StochasticEnvironment env(instance, root.fork(kEnvFork));
  RngStream privatizer = root.fork(kPrivatizerFork);
  RunOutcome outcome =
      simulate_run(*policy, env, instance, horizon, epsilon, privatizer);
  RunSummary summary;
  summary.nash = run_nash_regret(outcome.trace.log_means, instance.mu_star());
  summary.average =
      run_average_regret(outcome.trace.log_means, instance.mu_star());
  summary.log_means = std::move(outcome.trace.log_means);
  summary.tau = outcome.tau;
  summary.phase_two_pulls = std::move(outcome.phase_two_pulls);
  return summary;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (algorithms.empty()) throw ConfigError("config lists no algorithms");
  bool any_private = false;
  for (const auto& a : algorithms) {
    if (!known_policy(a.name)) {
      throw ConfigError("unknown algorithm '" + a.name + "'");
    }
    any_private = any_private || is_private_policy(a.name);
    if (a.c && !(*a.c >= 0.0)) throw ConfigError("c must be >= 0");
    if (a.alpha && !(*a.alpha >= 0.0)) throw ConfigError("alpha must be >= 0");
  }
  if (runs < 1) throw ConfigError("runs must be >= 1");
  if (horizons.empty()) throw ConfigError("config lists no horizons");
  for (std::size_t i = 0; i < horizons.size(); ++i) {
    if (horizons[i] < 1) throw ConfigError("horizons must be >= 1");
    if (i > 0 && horizons[i] <= horizons[i - 1]) {
      throw ConfigError("horizons must be strictly increasing");
    }
  }
  for (double e : epsilons) {
    if (!(e > 0.0)) throw ConfigError("epsilons must be positive");
  }
  if (any_private && epsilons.empty()) {
    throw ConfigError("private algorithms need at least one epsilon");
  }
  if (threads < 0) throw ConfigError("threads must be >= 0");
  if (!(floor >= 0.0 && floor < 1.0)) {
    throw ConfigError("floor must lie in [0, 1)");
  }
  if (instance.preset.empty()) {
    if (instance.arms.size() < 2) {
      throw ConfigError("explicit instances need at least two arms");
    }
  } else if (instance.preset != "adversarial" && instance.preset != "bern50" &&
             instance.preset != "mixed50") {
    throw ConfigError("unknown instance preset '" + instance.preset + "'");
  }
}

ExperimentConfig ExperimentConfig::from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  ExperimentConfig config;
  try {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    config.name = get_or<std::string>(j, "name", config.name);
    if (j.contains("instance")) {
      const json& inst = j.at("instance");
      config.instance.preset = get_or<std::string>(inst, "preset", "");
      if (inst.contains("seed")) {
        config.instance.seed = inst.at("seed").get<std::uint64_t>();
      }
      if (inst.contains("arms")) {
        for (const json& a : inst.at("arms")) {
          config.instance.arms.push_back(arm_from_json(a));
        }
      }
    }
    for (const json& a : j.value("algorithms", json::array())) {
      AlgorithmSpec spec;
      if (a.is_string()) {
        spec.name = a.get<std::string>();
      } else {
        spec.name = a.at("name").get<std::string>();
        if (a.contains("c")) spec.c = a.at("c").get<double>();
        if (a.contains("alpha")) spec.alpha = a.at("alpha").get<double>();
      }
      config.algorithms.push_back(std::move(spec));
    }
    config.epsilons =
        get_or<std::vector<double>>(j, "epsilons", config.epsilons);
    config.horizons =
        get_or<std::vector<std::int64_t>>(j, "horizons", config.horizons);
    config.runs = get_or<std::int64_t>(j, "runs", config.runs);
    config.seed = get_or<std::uint64_t>(j, "seed", config.seed);
    config.output_dir = get_or<std::string>(j, "output_dir", config.output_dir);
    config.threads = get_or<int>(j, "threads", config.threads);
    config.floor = get_or<double>(j, "floor", config.floor);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config field: ") + e.what());
  }
  config.validate();
  return config;
}

std::string ExperimentConfig::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  nlohmann::ordered_json inst = nlohmann::ordered_json::object();
  if (!instance.preset.empty()) inst["preset"] = instance.preset;
  if (instance.seed) inst["seed"] = *instance.seed;
  if (!instance.arms.empty()) {
    inst["arms"] = nlohmann::ordered_json::array();
    for (const auto& a : instance.arms) inst["arms"].push_back(arm_to_json(a));
  }
  j["instance"] = inst;
  j["algorithms"] = nlohmann::ordered_json::array();
  for (const auto& a : algorithms) {
    nlohmann::ordered_json aj;
    aj["name"] = a.name;
    if (a.c) aj["c"] = *a.c;
    if (a.alpha) aj["alpha"] = *a.alpha;
    j["algorithms"].push_back(aj);
  }
  j["epsilons"] = epsilons;
  j["horizons"] = horizons;
  j["runs"] = runs;
  j["seed"] = seed;
  j["output_dir"] = output_dir;
  j["threads"] = threads;
  j["floor"] = floor;
  return j.dump(2);
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return ExperimentConfig::from_json(text.str());
}

std::span<const std::string_view> figure_preset_names() {
  return kFigurePresets;
}

ExperimentConfig figure_preset(std::string_view name) {
  if (name == "fig_a") {
    ExperimentConfig config = preset_base(name, "adversarial");
    config.algorithms = algorithms({"gdp_ncb", "adap_ucb"});
    config.horizons.clear();
    for (std::int64_t t = 50; t <= 1000; t += 50) config.horizons.push_back(t);
    return config;
  }
  if (name == "fig_b") {
    ExperimentConfig config = preset_base(name, "bern50");
    config.algorithms =
        algorithms({"ncb", "adap_ucb", "ldp_ucb", "gdp_ncb", "ldp_ncb"});
    return config;
  }
  if (name == "fig_c" || name == "fig_d") {
    ExperimentConfig config = preset_base(name, "bern50");
    config.algorithms = algorithms({name == "fig_c" ? "gdp_ncb" : "ldp_ncb"});
    config.epsilons = {0.1, 0.2, 0.5, 1.0};
    return config;
  }
  if (name == "fig_e") {
    ExperimentConfig config = preset_base(name, "bern50");
    config.algorithms = algorithms({"ncb", "gdp_ncb", "ldp_ncb"});
    return config;
  }
  if (name == "fig_f") {
    ExperimentConfig config = preset_base(name, "mixed50");
    config.algorithms = algorithms({"ncb", "gdp_ncb", "ldp_ncb"});
    return config;
  }
  throw ConfigError("unknown figure preset '" + std::string(name) + "'");
}

BanditInstance build_instance(const InstanceSpec& spec, std::int64_t horizon,
                              std::uint64_t master_seed) {
  if (spec.preset.empty()) return BanditInstance(spec.arms);
  if (spec.preset == "adversarial") return adversarial_instance(horizon);
  return make_figure_instance(spec.preset, spec.seed.value_or(master_seed));
}

PolicyParams policy_params_for(const AlgorithmSpec& algorithm, std::size_t k,
                               std::int64_t horizon, double epsilon) {
  PolicyParams params;
  params.k = k;
  params.horizon = horizon;
  params.epsilon = epsilon;
  if (algorithm.c) params.c = *algorithm.c;
  if (algorithm.alpha) params.alpha = *algorithm.alpha;
  params.validate();
  return params;
}

RunOutcome simulate_run(Policy& policy, RewardSource& source,
                        const BanditInstance& instance, std::int64_t horizon,
                        double epsilon, RngStream& privatizer) {
  const bool local = policy.reward_model() == RewardModel::kLocallyPrivate;
  const auto& log_means = instance.log_means();
  RunOutcome outcome;
  outcome.trace.reserve(static_cast<std::size_t>(horizon));
  outcome.phase_two_pulls.assign(instance.num_arms(), 0);
  for (std::int64_t t = 1; t <= horizon; ++t) {
    const bool phase_two = policy.in_phase_two();
    const std::size_t arm = policy.select_arm();
    const double reward = source.pull(arm, t);
    policy.observe_reward(
        arm, local ? local_privatize(reward, epsilon, privatizer) : reward);
    if (phase_two) ++outcome.phase_two_pulls[arm];
    outcome.trace.push(static_cast<std::uint32_t>(arm), reward, log_means[arm]);
  }
  outcome.tau = policy.phase_one_rounds();
  return outcome;
}

std::uint64_t cell_hash(std::string_view algorithm, double epsilon,
                        std::int64_t horizon) {
  // FNV-1a over the name, then the eps bits and T through mix64.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : algorithm) {
    h = (h ^ ch) * 0x100000001b3ULL;
  }
  h = mix64(h ^ std::bit_cast<std::uint64_t>(epsilon));
  return mix64(h ^ static_cast<std::uint64_t>(horizon));
}

CellResult run_cell(const ExperimentConfig& config,
                    const AlgorithmSpec& algorithm, double epsilon,
                    std::int64_t horizon, const BanditInstance& instance) {
  const std::uint64_t hash = cell_hash(algorithm.name, epsilon, horizon);
  const int workers = static_cast<int>(std::min<std::int64_t>(
      config.threads > 0 ? config.threads
                         : std::max(1u, std::thread::hardware_concurrency()),
      config.runs));

  MeanRewardAccumulator acc(static_cast<std::size_t>(horizon));
  std::vector<double> nash;
  std::vector<double> average;
  CellResult cell;
  std::vector<RunSummary> batch(workers);
  for (std::int64_t first = 0; first < config.runs; first += workers) {
    const int n =
        static_cast<int>(std::min<std::int64_t>(workers, config.runs - first));
    auto work = [&](int i) {
      batch[i] = run_one(config, algorithm, epsilon, horizon, instance, hash,
                         first + i);
    };
    if (n == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (int i = 0; i < n; ++i) pool.emplace_back(work, i);
    }
    for (int i = 0; i < n; ++i) {
      acc.add_run(batch[i].log_means);
      nash.push_back(batch[i].nash);
      average.push_back(batch[i].average);
      cell.tau.push_back(batch[i].tau);
      cell.phase_two_pulls.push_back(std::move(batch[i].phase_two_pulls));
    }
  }

  RegretReport& report = cell.report;
  report.algorithm = algorithm.name;
  report.epsilon = epsilon;
  report.k = instance.num_arms();
  report.mu_star = instance.mu_star();
  report.seed = config.seed;
  fill_regrets(report, acc.finish(config.floor), nash, average);
  return cell;
}

std::vector<CellResult> run_cells(const ExperimentConfig& config) {
  config.validate();
  std::vector<CellResult> cells;
  for (const AlgorithmSpec& algorithm : config.algorithms) {
    std::vector<double> eps_list = config.epsilons;
    if (!is_private_policy(algorithm.name)) eps_list = {kInf};
    for (double epsilon : eps_list) {
      for (std::int64_t horizon : config.horizons) {
        const BanditInstance instance =
            build_instance(config.instance, horizon, config.seed);
        cells.push_back(
            run_cell(config, algorithm, epsilon, horizon, instance));
      }
    }
  }
  return cells;
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::string regret_csv(std::span<const CellResult> cells) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const CellResult& cell : cells) {
    const RegretReport& r = cell.report;
    out += r.algorithm;
    for (const std::string& field :
         {format_number(r.epsilon), std::to_string(r.k),
          std::to_string(r.horizon), std::to_string(r.runs),
          format_number(r.nash_regret), format_number(r.nash_regret_std),
          format_number(r.average_regret), format_number(r.average_regret_std),
          std::to_string(r.floored_rounds), std::to_string(r.seed)}) {
      out += ',';
      out += field;
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, std::string_view text) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
  if (ec) {
    throw IoError("cannot create directory for '" + path +
                  "': " + ec.message());
  }
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed for '" + path + "'");
}

ExperimentResult run_experiment(const ExperimentConfig& config,
                                bool write_files) {
  ExperimentResult result;
  if (write_files) {
    write_text_file(config.output_dir + "/" + config.name + ".config.json",
                    config.to_json());
  }
  result.cells = run_cells(config);
  result.csv = regret_csv(result.cells);
  if (write_files) {
    result.csv_path = config.output_dir + "/" + config.name + ".csv";
    write_text_file(result.csv_path, result.csv);
  }
  return result;
}

}  // namespace dpncb
