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

#include "dpncb/environment.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dpncb/errors.h"

namespace dpncb {
namespace {

// Means below this are treated as exactly zero when sampling.
constexpr double kBernoulliZero = 1e-300;
const double kLogBernoulliZero = std::log(kBernoulliZero);

// Arm-mean draws for the 50-arm presets come from a stream that cannot
// collide with run streams of the same seed.
constexpr std::uint64_t kInstanceStreamTag =
    0x696e7374616e6365ULL;  // "instance"

constexpr double kMeanLow = 0.005;
constexpr double kMeanHigh = 1.0;

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

std::vector<double> draw_means(std::uint64_t seed, std::size_t k) {
  RngStream stream(seed, kInstanceStreamTag);
  std::vector<double> means(k);
  for (double& m : means) {
    m = kMeanLow + (kMeanHigh - kMeanLow) * stream.uniform_open01();
  }
  return means;
}

}  // namespace

std::string_view arm_kind_name(ArmKind kind) {
  switch (kind) {
    case ArmKind::kBernoulli:
      return "bernoulli";
    case ArmKind::kBeta:
      return "beta";
    case ArmKind::kTwoPoint:
      return "two_point";
    case ArmKind::kUniform01:
      return "uniform01";
    case ArmKind::kConstant:
      return "constant";
  }
  return "unknown";
}

ArmSpec::ArmSpec(ArmKind kind, std::array<double, 3> params,
                 std::size_t num_params, double mean, double log_mean)
    : kind_(kind),
      params_(params),
      num_params_(num_params),
      mean_(mean),
      log_mean_(log_mean) {}

ArmSpec ArmSpec::bernoulli(double p) {
  require(p > 0.0 && p <= 1.0,
          "bernoulli mean must lie in (0, 1], got " + std::to_string(p));
  return ArmSpec(ArmKind::kBernoulli, {p, 0, 0}, 1, p, std::log(p));
}

ArmSpec ArmSpec::bernoulli_log(double log_p) {
  require(log_p <= 0.0 && std::isfinite(log_p),
          "bernoulli log-mean must be finite and <= 0");
  const double p = std::exp(log_p);
  return ArmSpec(ArmKind::kBernoulli, {p, 0, 0}, 1, p, log_p);
}

ArmSpec ArmSpec::beta(double a, double b) {
  require(a > 0.0 && b > 0.0 && std::isfinite(a) && std::isfinite(b),
          "beta parameters must be positive");
  const double mean = a / (a + b);
  return ArmSpec(ArmKind::kBeta, {a, b, 0}, 2, mean, std::log(mean));
}

ArmSpec ArmSpec::two_point(double lo, double hi, double p) {
  require(lo >= 0.0 && lo <= hi && hi <= 1.0,
          "two_point needs 0 <= lo <= hi <= 1");
  require(p >= 0.0 && p <= 1.0, "two_point probability must lie in [0, 1]");
  const double mean = lo * (1.0 - p) + hi * p;
  require(mean > 0.0, "two_point mean must be positive");
  return ArmSpec(ArmKind::kTwoPoint, {lo, hi, p}, 3, mean, std::log(mean));
}

ArmSpec ArmSpec::uniform01() {
  return ArmSpec(ArmKind::kUniform01, {0, 0, 0}, 0, 0.5, std::log(0.5));
}

ArmSpec ArmSpec::constant(double value) {
  require(value > 0.0 && value <= 1.0,
          "constant reward must lie in (0, 1], got " + std::to_string(value));
  return ArmSpec(ArmKind::kConstant, {value, 0, 0}, 1, value, std::log(value));
}

double ArmSpec::sample(RngStream& stream) const {
  switch (kind_) {
    case ArmKind::kBernoulli: {
      const double u = stream.uniform_open01();
      if (log_mean_ < kLogBernoulliZero) return 0.0;
      return u < params_[0] ? 1.0 : 0.0;
    }
    case ArmKind::kBeta: {
      const double a = params_[0];
      const double b = params_[1];
      // Closed-form inversions for the one-parameter families, gamma ratio
      // otherwise.
      if (b == 1.0) return std::pow(stream.uniform_open01(), 1.0 / a);
      if (a == 1.0) return 1.0 - std::pow(stream.uniform_open01(), 1.0 / b);
      const double x = std::gamma_distribution<double>(a, 1.0)(stream);
      const double y = std::gamma_distribution<double>(b, 1.0)(stream);
      return std::clamp(x / (x + y), 0.0, 1.0);
    }
    case ArmKind::kTwoPoint:
      return stream.uniform_open01() < params_[2] ? params_[1] : params_[0];
    case ArmKind::kUniform01:
      return stream.uniform_open01();
    case ArmKind::kConstant:
      return params_[0];
  }
  return 0.0;
}

double true_mean(const ArmSpec& spec) { return spec.mean(); }

BanditInstance::BanditInstance(std::vector<ArmSpec> arms)
    : arms_(std::move(arms)) {
  require(arms_.size() >= 2, "a bandit instance needs at least two arms");
  log_means_.reserve(arms_.size());
  best_arm_ = 0;
  for (std::size_t i = 0; i < arms_.size(); ++i) {
    log_means_.push_back(arms_[i].log_mean());
    if (log_means_[i] > log_means_[best_arm_]) best_arm_ = i;
  }
  log_mu_star_ = log_means_[best_arm_];
  mu_star_ = arms_[best_arm_].mean();
}

const ArmSpec& BanditInstance::arm(std::size_t i) const {
  if (i >= arms_.size()) {
    throw IndexError("arm " + std::to_string(i) +
                     " out of range for k=" + std::to_string(arms_.size()));
  }
  return arms_[i];
}

double sample_reward(const BanditInstance& instance, std::size_t arm,
                     RngStream& stream) {
  return instance.arm(arm).sample(stream);
}

BanditInstance adversarial_instance(std::int64_t horizon) {
  require(horizon >= 1, "adversarial preset needs T >= 1");
  const double log_mu1 =
      -static_cast<double>(horizon) * (1.0 + std::numbers::ln2);
  return BanditInstance(
      {ArmSpec::bernoulli_log(log_mu1), ArmSpec::bernoulli(1.0)});
}

BanditInstance bern50_instance(std::uint64_t seed) {
  std::vector<ArmSpec> arms;
  for (double m : draw_means(seed, 50)) arms.push_back(ArmSpec::bernoulli(m));
  return BanditInstance(std::move(arms));
}

ArmSpec mixed50_arm_for(double drawn_mean) {
  if (drawn_mean >= 0.75) return ArmSpec::bernoulli(drawn_mean);
  if (drawn_mean >= 0.5) return ArmSpec::beta(4.0, 1.0);
  if (drawn_mean >= 0.25) return ArmSpec::two_point(0.4, 1.0, 0.5);
  return ArmSpec::uniform01();
}

BanditInstance mixed50_instance(std::uint64_t seed) {
  std::vector<ArmSpec> arms;
  for (double m : draw_means(seed, 50)) arms.push_back(mixed50_arm_for(m));
  return BanditInstance(std::move(arms));
}

BanditInstance make_figure_instance(std::string_view preset,
                                    std::uint64_t horizon_or_seed) {
  if (preset == "adversarial") {
    return adversarial_instance(static_cast<std::int64_t>(horizon_or_seed));
  }
  if (preset == "bern50") return bern50_instance(horizon_or_seed);
  if (preset == "mixed50") return mixed50_instance(horizon_or_seed);
  throw ConfigError("unknown instance preset '" + std::string(preset) + "'");
}

ReplayTape::ReplayTape(std::vector<double> rewards)
    : rewards_(std::move(rewards)) {
  for (double x : rewards_) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw DomainError("replay rewards must lie in [0, 1], got " +
                        std::to_string(x));
    }
  }
}

double replay_reward(const ReplayTape& tape, std::int64_t t) {
  if (t < 1 || static_cast<std::size_t>(t) > tape.size()) {
    throw IndexError("round " + std::to_string(t) + " outside tape of length " +
                     std::to_string(tape.size()));
  }
  return tape.rewards()[static_cast<std::size_t>(t - 1)];
}

bool are_neighbors(const ReplayTape& a, const ReplayTape& b) {
  if (a.size() != b.size()) return false;
  std::size_t differing = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.rewards()[i] != b.rewards()[i]) ++differing;
  }
  return differing == 1;
}

double StochasticEnvironment::pull(std::size_t arm, std::int64_t /*t*/) {
  return sample_reward(*instance_, arm, stream_);
}

double ReplayEnvironment::pull(std::size_t /*arm*/, std::int64_t t) {
  return replay_reward(*tape_, t);
}

}  // namespace dpncb
