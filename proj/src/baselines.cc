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

#include "dpncb/baselines.h"

#include <cmath>
#include <string>

#include "dpncb/errors.h"
#include "dpncb/laplace.h"

namespace dpncb {
namespace {

// First arm never pulled, or k when all have been.
std::size_t first_unpulled(const std::vector<std::int64_t>& counts) {
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) return i;
  }
  return counts.size();
}

void check_raw(double reward, std::string_view who) {
  if (!(reward >= 0.0 && reward <= 1.0)) {
    throw DomainError(std::string(who) + " expects raw rewards in [0, 1]");
  }
}

}  // namespace

Ucb1Policy::Ucb1Policy(PolicyParams params)
    : params_(params),
      n_(params.k, 0),
      mean_(params.k, 0.0),
      scratch_(params.k) {
  params_.validate();
}

std::size_t Ucb1Policy::do_select() {
  if (const auto arm = first_unpulled(n_); arm < params_.k) return arm;
  const double log_t = std::log(static_cast<double>(t_));
  for (std::size_t i = 0; i < params_.k; ++i) {
    scratch_[i] =
        mean_[i] + std::sqrt(2.0 * log_t / static_cast<double>(n_[i]));
  }
  return argmax_lowest(scratch_);
}

void Ucb1Policy::do_observe(std::size_t arm, double reward) {
  check_raw(reward, "ucb1");
  const double n = static_cast<double>(++n_[arm]);
  mean_[arm] += (reward - mean_[arm]) / n;
  ++t_;
}

AdapUcbPolicy::AdapUcbPolicy(PolicyParams params, RngStream stream)
    : params_(params),
      stream_(std::move(stream)),
      last_length_(params.k, 0),
      mu_tilde_(params.k, 0.0),
      scratch_(params.k) {
  params_.validate();
}

std::size_t AdapUcbPolicy::do_select() {
  if (episode_) return episode_->arm;
  Episode next;
  if (const auto arm = first_unpulled(last_length_); arm < params_.k) {
    next.arm = arm;
    next.length = 1;
  } else {
    const double log_t = std::log(static_cast<double>(t_));
    for (std::size_t i = 0; i < params_.k; ++i) {
      const double n = static_cast<double>(last_length_[i]);
      scratch_[i] =
          mu_tilde_[i] + std::sqrt(log_t / n) + log_t / (params_.epsilon * n);
    }
    next.arm = argmax_lowest(scratch_);
    next.length = 2 * last_length_[next.arm];
  }
  episode_ = next;
  return next.arm;
}

void AdapUcbPolicy::do_observe(std::size_t arm, double reward) {
  check_raw(reward, "adap_ucb");
  Episode& episode = *episode_;
  episode.sum += reward;
  ++episode.pulls;
  ++t_;
  if (episode.pulls < episode.length) return;
  const double n = static_cast<double>(episode.length);
  mu_tilde_[arm] =
      episode.sum / n +
      sample_laplace(stream_, LaplaceScale(1.0 / (params_.epsilon * n)));
  last_length_[arm] = episode.length;
  episode_.reset();
}

LdpUcbPolicy::LdpUcbPolicy(PolicyParams params)
    : params_(params),
      n_(params.k, 0),
      mean_(params.k, 0.0),
      scratch_(params.k) {
  params_.validate();
}

std::size_t LdpUcbPolicy::do_select() {
  if (const auto arm = first_unpulled(n_); arm < params_.k) return arm;
  const double log_t = std::log(static_cast<double>(t_));
  const double width = 1.0 + 1.0 / params_.epsilon;
  for (std::size_t i = 0; i < params_.k; ++i) {
    scratch_[i] =
        mean_[i] + width * std::sqrt(2.0 * log_t / static_cast<double>(n_[i]));
  }
  return argmax_lowest(scratch_);
}

void LdpUcbPolicy::do_observe(std::size_t arm, double reward) {
  if (!std::isfinite(reward)) {
    throw DomainError("ldp_ucb expects a finite privatized reward");
  }
  const double n = static_cast<double>(++n_[arm]);
  mean_[arm] += (reward - mean_[arm]) / n;
  ++t_;
}

}  // namespace dpncb
