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

#include "dpncb/audit.h"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <thread>

#include "dpncb/errors.h"
#include "dpncb/laplace.h"
#include "dpncb/policy.h"
#include "json.hpp"

namespace dpncb {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Trials per derived stream; fixed so results do not depend on threads.
constexpr std::int64_t kChunk = 1 << 16;

bool is_degenerate(std::span<const std::int64_t> counts) {
  return std::count_if(counts.begin(), counts.end(),
                       [](std::int64_t c) { return c > 0; }) <= 1;
}

// Runs body(chunk, begin, end, histogram) for every chunk on `threads` workers
// and sums the per-chunk histograms.
template <typename Body>
std::vector<std::int64_t> chunked_histogram(std::int64_t trials,
                                            std::size_t outcomes, int threads,
                                            const Body& body) {
  const std::int64_t chunks = (trials + kChunk - 1) / kChunk;
  const int workers =
      static_cast<int>(std::clamp<std::int64_t>(threads, 1, chunks));
  std::vector<std::vector<std::int64_t>> partial(
      workers, std::vector<std::int64_t>(outcomes, 0));
  auto work = [&](int w) {
    for (std::int64_t c = w; c < chunks; c += workers) {
      const std::int64_t begin = c * kChunk;
      const std::int64_t end = std::min(trials, begin + kChunk);
      body(c, begin, end, partial[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::vector<std::int64_t> total(outcomes, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < outcomes; ++i) total[i] += p[i];
  }
  return total;
}

void check_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0, 1], got " +
                      std::to_string(x));
  }
}

}  // namespace

AuditConfig AuditConfig::scalar_default() { return AuditConfig{}; }

AuditConfig AuditConfig::sequence_default() {
  AuditConfig config;
  config.trials = 200'000;
  config.outcome_space = OutcomeSpace::kArmSequences;
  config.min_count = 100;
  return config;
}

void AuditConfig::validate() const {
  const std::int64_t min_trials =
      outcome_space == OutcomeSpace::kScalarBins ? 10'000 : 100'000;
  if (trials < min_trials) {
    throw ConfigError("audit needs at least " + std::to_string(min_trials) +
                      " trials, got " + std::to_string(trials));
  }
  if (min_count < 5) throw ConfigError("audit min_count must be at least 5");
  if (outcome_space == OutcomeSpace::kScalarBins &&
      (n_bins < 2 || !(range_lo < range_hi))) {
    throw ConfigError("audit needs at least 2 bins over a non-empty range");
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw ConfigError("audit confidence must lie in (0, 1)");
  }
  if (!(slack >= 0.0)) throw ConfigError("audit slack must be non-negative");
}

std::string_view verdict_name(AuditVerdict verdict) {
  return verdict == AuditVerdict::kConsistent ? "consistent"
                                              : "violation_suspected";
}

bool AuditReport::unbounded() const { return std::isinf(epsilon_hat); }

AuditReport estimate_from_counts(std::span<const std::int64_t> counts,
                                 std::span<const std::int64_t> counts_prime,
                                 double epsilon_target,
                                 const AuditConfig& config) {
  if (counts.size() != counts_prime.size()) {
    throw ShapeError("audit histograms differ in size");
  }
  AuditReport report;
  report.epsilon_target = epsilon_target;

  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto lo = std::min(counts[i], counts_prime[i]);
    const auto hi = std::max(counts[i], counts_prime[i]);
    if (lo == 0 && hi >= config.min_count) {
      report.epsilon_hat = report.ci_low = report.ci_high = kInf;
      report.bins_used = 1;
      report.verdict = AuditVerdict::kViolationSuspected;
      return report;
    }
  }
  if (is_degenerate(counts) || is_degenerate(counts_prime)) {
    throw AuditError("degenerate histogram: all mass in one outcome");
  }

  std::vector<double> lr;
  std::vector<double> se;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < config.min_count || counts_prime[i] < config.min_count) {
      continue;
    }
    const double a = static_cast<double>(counts[i]);
    const double b = static_cast<double>(counts_prime[i]);
    lr.push_back(std::abs(std::log(a / b)));
    se.push_back(std::sqrt(1.0 / a + 1.0 / b));
  }
  if (lr.empty()) {
    throw AuditError("no outcome reaches min_count " +
                     std::to_string(config.min_count) + " on both sides");
  }
  report.bins_used = static_cast<std::int64_t>(lr.size());

  const double tail = (1.0 - config.confidence) / (2.0 * lr.size());
  const double z =
      boost::math::quantile(boost::math::normal_distribution<>(), 1.0 - tail);
  for (std::size_t i = 0; i < lr.size(); ++i) {
    report.epsilon_hat = std::max(report.epsilon_hat, lr[i]);
    report.ci_low = std::max(report.ci_low, lr[i] - z * se[i]);
    report.ci_high = std::max(report.ci_high, lr[i] + z * se[i]);
  }
  report.verdict = report.ci_low > epsilon_target + config.slack
                       ? AuditVerdict::kViolationSuspected
                       : AuditVerdict::kConsistent;
  return report;
}

ScalarMechanism laplace_mechanism(double epsilon) {
  const LaplaceScale scale(1.0 / epsilon);
  return [scale](double x, RngStream& stream) {
    return x + sample_laplace(stream, scale);
  };
}

int scalar_bin(double value, const AuditConfig& config) {
  const double width = (config.range_hi - config.range_lo) / config.n_bins;
  const double pos = std::floor((value - config.range_lo) / width);
  if (!(pos >= 0.0)) return 0;  // also NaN
  if (pos >= config.n_bins) return config.n_bins - 1;
  return static_cast<int>(pos);
}

AuditReport audit_scalar_mechanism(const ScalarMechanism& mechanism, double x,
                                   double x_prime, double epsilon_target,
                                   const AuditConfig& config) {
  check_unit(x, "x");
  check_unit(x_prime, "x_prime");
  config.validate();
  if (config.outcome_space != OutcomeSpace::kScalarBins) {
    throw ConfigError("scalar audit needs a scalar_bins outcome space");
  }
  auto histogram = [&](double input, std::uint64_t side) {
    return chunked_histogram(
        config.trials, static_cast<std::size_t>(config.n_bins), config.threads,
        [&](std::int64_t chunk, std::int64_t begin, std::int64_t end,
            std::vector<std::int64_t>& counts) {
          RngStream stream = derive_stream(
              config.seed, (side << 48) ^ static_cast<std::uint64_t>(chunk));
          for (std::int64_t i = begin; i < end; ++i) {
            ++counts[scalar_bin(mechanism(input, stream), config)];
          }
        });
  };
  const auto counts = histogram(x, 1);
  const auto counts_prime = histogram(x_prime, 2);
  AuditReport report =
      estimate_from_counts(counts, counts_prime, epsilon_target, config);
  report.trials = config.trials;
  report.mechanism = "scalar";
  return report;
}

std::vector<std::int64_t> arm_sequence_histogram(std::string_view policy_name,
                                                 const PolicyParams& params,
                                                 const ReplayTape& tape,
                                                 const AuditConfig& config,
                                                 std::uint64_t tape_tag) {
  const std::size_t horizon = static_cast<std::size_t>(params.horizon);
  const std::size_t outcomes = std::size_t{1} << horizon;
  return chunked_histogram(
      config.trials, outcomes, config.threads,
      [&](std::int64_t chunk, std::int64_t begin, std::int64_t end,
          std::vector<std::int64_t>& counts) {
        const RngStream base = derive_stream(
            config.seed, (tape_tag << 48) ^ static_cast<std::uint64_t>(chunk));
        for (std::int64_t i = begin; i < end; ++i) {
          const auto id = 2 * static_cast<std::uint64_t>(i);
          auto policy = make_policy(policy_name, params, base.fork(id));
          const bool local =
              policy->reward_model() == RewardModel::kLocallyPrivate;
          std::optional<RngStream> privatizer;
          if (local) privatizer.emplace(base.fork(id + 1));
          ReplayEnvironment env(tape);
          std::size_t code = 0;
          for (std::int64_t t = 1; t <= params.horizon; ++t) {
            const std::size_t arm = policy->select_arm();
            double reward = env.pull(arm, t);
            if (local) {
              reward = local_privatize(reward, params.epsilon, *privatizer);
            }
            policy->observe_reward(arm, reward);
            code = (code << 1) | arm;
          }
          ++counts[code];
        }
      });
}

AuditReport audit_bandit_global(std::string_view policy_name,
                                const PolicyParams& params,
                                const ReplayTape& tape,
                                const ReplayTape& tape_prime,
                                const AuditConfig& config) {
  if (params.k != 2) throw DomainError("sequence audit needs k = 2");
  if (params.horizon < 1 || params.horizon > kMaxAuditHorizon) {
    throw DomainError("sequence audit needs 1 <= T <= " +
                      std::to_string(kMaxAuditHorizon));
  }
  if (tape.size() != static_cast<std::size_t>(params.horizon)) {
    throw DomainError("tape length must equal the horizon");
  }
  if (!are_neighbors(tape, tape_prime)) {
    throw DomainError("audit tapes must differ at exactly one round");
  }
  params.validate();
  config.validate();
  if (config.outcome_space != OutcomeSpace::kArmSequences) {
    throw ConfigError("sequence audit needs an arm_sequences outcome space");
  }
  const auto counts =
      arm_sequence_histogram(policy_name, params, tape, config, 1);
  const auto counts_prime =
      arm_sequence_histogram(policy_name, params, tape_prime, config, 2);
  AuditReport report =
      estimate_from_counts(counts, counts_prime, params.epsilon, config);
  report.trials = config.trials;
  report.mechanism = std::string(policy_name);
  return report;
}

std::string audit_report_json(const AuditReport& report) {
  auto num = [](double v) -> nlohmann::json {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
  };
  nlohmann::ordered_json j;
  j["mechanism"] = report.mechanism;
  j["epsilon_hat"] = num(report.epsilon_hat);
  j["ci_low"] = num(report.ci_low);
  j["ci_high"] = num(report.ci_high);
  j["epsilon_target"] = num(report.epsilon_target);
  j["verdict"] = verdict_name(report.verdict);
  j["trials"] = report.trials;
  j["bins_used"] = report.bins_used;
  j["estimator"] =
      "lower bound; 'consistent' means not refuted, not certified private";
  return j.dump(2);
}

}  // namespace dpncb
