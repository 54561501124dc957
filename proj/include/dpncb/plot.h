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

#ifndef DPNCB_PLOT_H_
#define DPNCB_PLOT_H_

#include <string>
#include <string_view>
#include <vector>

#include "dpncb/metrics.h"

namespace dpncb {

struct PlotSpec {
  bool log_log = false;
  std::string title = "Nash regret";
  int width = 720;
  int height = 480;
  // Smallest y drawn in log-log mode; lower values are clamped to it.
  double log_floor = 1e-4;
};

struct PlotOutput {
  std::string svg;
  std::vector<std::string> warnings;
  int series = 0;
};

// Parses a regret CSV with the exact experiment header. Throws ParseError
// on a wrong header, a malformed row, or an empty body.
std::vector<RegretReport> parse_regret_csv(std::string_view text);

// One polyline per (algorithm, eps) series, x = T, y = nash_regret.
PlotOutput render_plot(const std::vector<RegretReport>& rows,
                       const PlotSpec& spec);

// Reads csv_path, writes an SVG to svg_path and returns the render result.
// Throws IoError or ParseError.
PlotOutput emit_plot(const std::string& csv_path, const std::string& svg_path,
                     const PlotSpec& spec);

}  // namespace dpncb

#endif  // DPNCB_PLOT_H_
