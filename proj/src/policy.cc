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

#include "dpncb/policy.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "dpncb/anytime.h"
#include "dpncb/baselines.h"
#include "dpncb/errors.h"
#include "dpncb/gdp_ncb.h"
#include "dpncb/laplace.h"
#include "dpncb/ldp_ncb.h"

namespace dpncb {
namespace {

constexpr std::array<std::string_view, 8> kPolicyNames = {
    "gdp_ncb", "ldp_ncb",  "anytime_gdp", "anytime_ldp",
    "ncb",     "adap_ucb", "ldp_ucb",     "ucb1"};

}  // namespace

std::size_t Policy::select_arm() {
  if (pending_) {
    throw StateError(std::string(name()) +
                     ": select_arm called before observing arm " +
                     std::to_string(*pending_));
  }
  if (exhausted()) {
    throw StateError(std::string(name()) + ": select_arm past the horizon");
  }
  pending_ = do_select();
  return *pending_;
}

void Policy::observe_reward(std::size_t arm, double reward) {
  if (!pending_ || *pending_ != arm) {
    throw StateError(std::string(name()) + ": observed arm " +
                     std::to_string(arm) + " was not the selected arm");
  }
  do_observe(arm, reward);
  pending_.reset();
}

double local_privatize(double x, double epsilon, RngStream& stream) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("local_privatize expects x in [0, 1], got " +
                      std::to_string(x));
  }
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  if (std::isinf(epsilon)) {
    stream.uniform_open01();
    return x;
  }
  return x + sample_laplace(stream, LaplaceScale(1.0 / epsilon));
}

std::span<const std::string_view> policy_names() { return kPolicyNames; }

bool is_private_policy(std::string_view name) {
  return name != "ncb" && name != "ucb1";
}

std::unique_ptr<Policy> make_policy(std::string_view name,
                                    const PolicyParams& params,
                                    RngStream stream) {
  if (name == "gdp_ncb") {
    return std::make_unique<GdpNcbPolicy>(params, std::move(stream));
  }
  if (name == "ldp_ncb") {
    return std::make_unique<LdpNcbPolicy>(params, std::move(stream));
  }
  if (name == "anytime_gdp") {
    return std::make_unique<AnytimePolicy>(InnerModel::kGlobal, params,
                                           std::move(stream));
  }
  if (name == "anytime_ldp") {
    return std::make_unique<AnytimePolicy>(InnerModel::kLocal, params,
                                           std::move(stream));
  }
  if (name == "ncb") {
    return std::make_unique<GdpNcbPolicy>(params, std::move(stream),
                                          /*private_release=*/false);
  }
  if (name == "adap_ucb") {
    return std::make_unique<AdapUcbPolicy>(params, std::move(stream));
  }
  if (name == "ldp_ucb") return std::make_unique<LdpUcbPolicy>(params);
  if (name == "ucb1") return std::make_unique<Ucb1Policy>(params);
  throw ConfigError("unknown policy '" + std::string(name) + "'");
}

}  // namespace dpncb
