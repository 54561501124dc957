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

#ifndef DPNCB_LAPLACE_H_
#define DPNCB_LAPLACE_H_

#include "dpncb/rng.h"

namespace dpncb {

// Scale b of a zero-mean Laplace law, density exp(-|x|/b) / (2b).
// Positive and finite by construction.
class LaplaceScale {
 public:
  // Throws DomainError unless 0 < b < inf.
  explicit LaplaceScale(double b);
  double value() const { return b_; }

 private:
  double b_;
};

// Inverse CDF: -b * sgn(u - 1/2) * ln(1 - 2|u - 1/2|).
// Throws DomainError for u outside (0, 1).
double laplace_quantile(LaplaceScale b, double u);

// Closed-form CDF.
double laplace_cdf(LaplaceScale b, double x);

// One Laplace draw by inversion. Consumes exactly one uniform.
double sample_laplace(RngStream& stream, LaplaceScale b);

}  // namespace dpncb

#endif  // DPNCB_LAPLACE_H_
