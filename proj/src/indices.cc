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

#include <cmath>
#include <limits>
#include <string>

#include "dpncb/errors.h"
#include "dpncb/ncb_index.h"

namespace dpncb {
namespace {

constexpr double kPhase1Scale = 1600.0;

void check_index_inputs(double mu, double n, const char* who) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw DomainError(std::string(who) + ": mean must lie in [0, 1], got " +
                      std::to_string(mu));
  }
  if (!(n >= 1.0)) {
    throw DomainError(std::string(who) + ": sample count must be >= 1");
  }
}

}  // namespace

void PolicyParams::validate() const {
  if (k < 1) throw ConfigError("k must be >= 1");
  if (horizon < 1) throw ConfigError("horizon must be >= 1");
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (!(c >= 0.0) || !std::isfinite(c)) throw ConfigError("c must be >= 0");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw ConfigError("alpha must be >= 0");
  }
}

double PolicyParams::log_horizon() const {
  return std::log(static_cast<double>(horizon));
}

double ncb_nonprivate(double mu_hat, double n, std::int64_t horizon) {
  if (!(mu_hat >= 0.0)) {
    throw DomainError("ncb_nonprivate: mean must be non-negative");
  }
  if (!(n >= 1.0)) throw DomainError("ncb_nonprivate: n must be >= 1");
  if (horizon < 2) throw DomainError("ncb_nonprivate: T must be >= 2");
  const double log_t = std::log(static_cast<double>(horizon));
  return mu_hat + 4.0 * std::sqrt(mu_hat * log_t / n);
}

double ncb_gdp(double mu_tilde, double n, const PolicyParams& params) {
  check_index_inputs(mu_tilde, n, "ncb_gdp");
  const double log_t = params.log_horizon();
  const double eps = params.epsilon;
  return mu_tilde + 2.0 * params.c * std::sqrt(2.0 * mu_tilde * log_t / n) +
         params.alpha * log_t * log_t / (eps * n) +
         4.0 * std::sqrt(2.0 * params.alpha / eps) * std::pow(log_t, 1.5) / n;
}

double ncb_ldp(double mu_tilde, double n, const PolicyParams& params) {
  check_index_inputs(mu_tilde, n, "ncb_ldp");
  const double log_t = params.log_horizon();
  const double eps = params.epsilon;
  return mu_tilde + 2.0 * params.c * std::sqrt(2.0 * mu_tilde * log_t / n) +
         (1.0 / eps) * std::sqrt(8.0 * params.alpha * log_t / n) +
         4.0 * params.c * std::pow(2.0 * params.alpha, 0.25) *
             std::pow(log_t, 0.75) / (std::sqrt(eps) * std::pow(n, 0.75));
}

double gdp_phase1_threshold(const PolicyParams& params) {
  const double log_t = params.log_horizon();
  return kPhase1Scale *
         (params.c * params.c * log_t + log_t * log_t / params.epsilon);
}

bool gdp_arm_stops_phase1(double pulls, double mu_tilde,
                          const PolicyParams& params) {
  return pulls * mu_tilde >= gdp_phase1_threshold(params);
}

LdpStopSides ldp_phase1_sides(double pulls, double mu_tilde,
                              const PolicyParams& params) {
  const double log_t = params.log_horizon();
  const double eps = params.epsilon;
  LdpStopSides sides;
  sides.lhs = pulls * mu_tilde;
  const double root =
      (1.0 / eps) * std::sqrt(8.0 * pulls * params.alpha * log_t);
  if (!(sides.lhs > root)) {
    sides.rhs = std::numeric_limits<double>::infinity();
    return sides;
  }
  sides.rhs = root + kPhase1Scale * (params.c * params.c * log_t +
                                     pulls * log_t * log_t /
                                         ((sides.lhs - root) * eps * eps));
  return sides;
}

bool ldp_arm_stops_phase1(double pulls, double mu_tilde,
                          const PolicyParams& params) {
  const LdpStopSides sides = ldp_phase1_sides(pulls, mu_tilde, params);
  return sides.lhs >= sides.rhs;
}

std::size_t argmax_lowest(std::span<const double> values) {
  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  bool found = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::isnan(values[i])) continue;
    if (!found || values[i] > best_value) {
      best = i;
      best_value = values[i];
      found = true;
    }
  }
  return best;
}

}  // namespace dpncb
