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

#include "dpncb/laplace.h"

#include <cmath>
#include <string>

#include "dpncb/errors.h"

namespace dpncb {

LaplaceScale::LaplaceScale(double b) : b_(b) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw DomainError("Laplace scale must be positive and finite, got " +
                      std::to_string(b));
  }
}

double laplace_quantile(LaplaceScale b, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("Laplace quantile needs u in (0,1), got " +
                      std::to_string(u));
  }
  const double d = u - 0.5;
  if (d == 0.0) return 0.0;
  const double magnitude = -b.value() * std::log1p(-2.0 * std::fabs(d));
  return d > 0.0 ? magnitude : -magnitude;
}

double laplace_cdf(LaplaceScale b, double x) {
  if (x < 0.0) return 0.5 * std::exp(x / b.value());
  return 1.0 - 0.5 * std::exp(-x / b.value());
}

double sample_laplace(RngStream& stream, LaplaceScale b) {
  return laplace_quantile(b, stream.uniform_open01());
}

}  // namespace dpncb
