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

#ifndef DPNCB_NCB_INDEX_H_
#define DPNCB_NCB_INDEX_H_

#include <cstddef>
#include <cstdint>
#include <span>

namespace dpncb {

// Parameters shared by the NCB family. epsilon may be +infinity, which is
// how the non-private NCB baseline is expressed (every privacy term and
// every noise draw vanishes).
struct PolicyParams {
  std::size_t k = 2;
  std::int64_t horizon = 1;
  double epsilon = 1.0;
  double c = 3.0;
  double alpha = 3.1;

  // Throws ConfigError unless k >= 1, T >= 1, epsilon > 0, c >= 0, alpha >= 0.
  void validate() const;
  double log_horizon() const;
};

// mu + 4 sqrt(mu ln T / n). Throws DomainError for mu < 0, n < 1 or T < 2.
double ncb_nonprivate(double mu_hat, double n, std::int64_t horizon);

// mu + 2c sqrt(2 mu ln T / n) + alpha (ln T)^2 / (eps n)
//    + 4 sqrt(2 alpha / eps) (ln T)^{3/2} / n.
// Expects mu in [0, 1] and n >= 1 (DomainError otherwise).
double ncb_gdp(double mu_tilde, double n, const PolicyParams& params);

// mu + 2c sqrt(2 mu ln T / n) + (1/eps) sqrt(8 alpha ln T / n)
//    + 4c (2 alpha)^{1/4} (ln T)^{3/4} / (sqrt(eps) n^{3/4}).
// Expects mu in [0, 1] and n >= 1 (DomainError otherwise).
double ncb_ldp(double mu_tilde, double n, const PolicyParams& params);

// 1600 (c^2 ln T + (ln T)^2 / eps).
double gdp_phase1_threshold(const PolicyParams& params);

// N * mu_tilde >= gdp_phase1_threshold.
bool gdp_arm_stops_phase1(double pulls, double mu_tilde,
                          const PolicyParams& params);

struct LdpStopSides {
  double lhs = 0.0;  // N mu
  double rhs = 0.0;  // +inf while N mu <= r
};

LdpStopSides ldp_phase1_sides(double pulls, double mu_tilde,
                              const PolicyParams& params);

// N mu >= max{ r, r + 1600 (c^2 ln T + N (ln T)^2 / ((N mu - r) eps^2)) }
// with r = (1/eps) sqrt(8 N alpha ln T). The second operand is evaluated
// only after N mu > r holds, so its denominator is positive.
bool ldp_arm_stops_phase1(double pulls, double mu_tilde,
                          const PolicyParams& params);

// Index of the largest value; ties go to the lowest index. NaN never wins.
std::size_t argmax_lowest(std::span<const double> values);

}  // namespace dpncb

#endif  // DPNCB_NCB_INDEX_H_
