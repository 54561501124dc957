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

#include "dpncb/metrics.h"

#include <cmath>
#include <limits>
#include <string>

#include "dpncb/errors.h"

namespace dpncb {
namespace {

constexpr double kAmGmSlack = 1e-9;

}  // namespace

void RunTrace::reserve(std::size_t n) {
  arms.reserve(n);
  rewards.reserve(n);
  log_means.reserve(n);
}

void RunTrace::push(std::uint32_t arm, double reward, double log_mean) {
  arms.push_back(arm);
  rewards.push_back(reward);
  log_means.push_back(log_mean);
}

MeanRewardAccumulator::MeanRewardAccumulator(std::size_t horizon)
    : max_log_(horizon, -std::numeric_limits<double>::infinity()),
      scaled_sum_(horizon, 0.0) {}

void MeanRewardAccumulator::add_run(std::span<const double> log_means) {
  if (log_means.size() != max_log_.size()) {
    throw ShapeError("run of length " + std::to_string(log_means.size()) +
                     " added to a curve of horizon " +
                     std::to_string(max_log_.size()));
  }
  for (std::size_t t = 0; t < log_means.size(); ++t) {
    const double x = log_means[t];
    double& m = max_log_[t];
    double& s = scaled_sum_[t];
    if (x <= m) {
      s += std::exp(x - m);
    } else {
      s = (s == 0.0 ? 0.0 : s * std::exp(m - x)) + 1.0;
      m = x;
    }
  }
  ++runs_;
}

MeanRewardCurve MeanRewardAccumulator::finish(double floor) const {
  if (runs_ == 0) throw ShapeError("no runs to aggregate");
  MeanRewardCurve curve;
  curve.runs = runs_;
  curve.floor = floor;
  curve.log_values.resize(max_log_.size());
  const double log_runs = std::log(static_cast<double>(runs_));
  const double log_floor =
      floor > 0.0 ? std::log(floor) : -std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < max_log_.size(); ++t) {
    double v = max_log_[t] + std::log(scaled_sum_[t]) - log_runs;
    if (v < log_floor) {
      v = log_floor;
      ++curve.floored_rounds;
    }
    curve.log_values[t] = v;
  }
  return curve;
}

MeanRewardCurve aggregate_runs(std::span<const RunTrace> traces, double floor) {
  if (traces.empty()) throw ShapeError("no runs to aggregate");
  MeanRewardAccumulator acc(traces.front().horizon());
  for (const RunTrace& trace : traces) acc.add_run(trace.log_means);
  return acc.finish(floor);
}

double nash_regret(const MeanRewardCurve& curve, double mu_star) {
  double sum = 0.0;
  for (double v : curve.log_values) {
    if (!std::isfinite(v)) {
      throw DomainError("Nash regret needs strictly positive expected rewards");
    }
    sum += v;
  }
  return mu_star - std::exp(sum / static_cast<double>(curve.log_values.size()));
}

double average_regret(const MeanRewardCurve& curve, double mu_star) {
  double sum = 0.0;
  for (double v : curve.log_values) sum += std::exp(v);
  return mu_star - sum / static_cast<double>(curve.log_values.size());
}

double run_nash_regret(std::span<const double> log_means, double mu_star) {
  double sum = 0.0;
  for (double v : log_means) sum += v;
  return mu_star - std::exp(sum / static_cast<double>(log_means.size()));
}

double run_average_regret(std::span<const double> log_means, double mu_star) {
  double sum = 0.0;
  for (double v : log_means) sum += std::exp(v);
  return mu_star - sum / static_cast<double>(log_means.size());
}

double exploration_budget_S(double mu_star, std::int64_t horizon,
                            double epsilon, PrivacyModel model, double c) {
  const double log_t = std::log(static_cast<double>(horizon));
  const double base = c * c * log_t / mu_star;
  if (model == PrivacyModel::kGlobal) {
    return base + log_t * log_t / (mu_star * epsilon);
  }
  const double r = log_t / (mu_star * epsilon);
  return base + r * r;
}

double sample_std(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

void fill_regrets(RegretReport& report, const MeanRewardCurve& curve,
                  std::span<const double> per_run_nash,
                  std::span<const double> per_run_average) {
  report.runs = curve.runs;
  report.horizon = curve.horizon();
  report.floored_rounds = curve.floored_rounds;
  report.nash_regret = nash_regret(curve, report.mu_star);
  report.average_regret = average_regret(curve, report.mu_star);
  report.nash_regret_std = sample_std(per_run_nash);
  report.average_regret_std = sample_std(per_run_average);
  if (report.nash_regret < report.average_regret - kAmGmSlack) {
    throw InvariantError("Nash regret " + std::to_string(report.nash_regret) +
                         " below average regret " +
                         std::to_string(report.average_regret) + " for " +
                         report.algorithm);
  }
}

}  // namespace dpncb
