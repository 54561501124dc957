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

#include "dpncb/plot.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <string>

#include "dpncb/errors.h"
#include "dpncb/experiment.h"

namespace dpncb {
namespace {

std::string csv_with(const std::string& body) {
  return std::string(kCsvHeader) + "\n" + body;
}

const std::string kTwoSeries = csv_with(
    "gdp_ncb,0.2,2,50,50,0.5,0,0.49,0.01,0,1\n"
    "gdp_ncb,0.2,2,100,50,0.4,0,0.39,0.01,0,1\n"
    "ucb1,inf,2,50,50,0.8,0,0.3,0.02,1,1\n"
    "ucb1,inf,2,100,50,0.7,0,0.2,0.02,1,1\n");

int count(const std::string& haystack, const std::string& needle) {
  int n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(ParseCsvTest, ReadsRows) {
  const auto rows = parse_regret_csv(kTwoSeries);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].algorithm, "gdp_ncb");
  EXPECT_EQ(rows[0].epsilon, 0.2);
  EXPECT_EQ(rows[1].horizon, 100);
  EXPECT_TRUE(std::isinf(rows[2].epsilon));
  EXPECT_EQ(rows[3].floored_rounds, 1);
}

TEST(ParseCsvTest, Errors) {
  EXPECT_THROW(parse_regret_csv(""), ParseError);
  EXPECT_THROW(parse_regret_csv(csv_with("")), ParseError);
  EXPECT_THROW(parse_regret_csv("a,b,c\n1,2,3\n"), ParseError);
  EXPECT_THROW(parse_regret_csv(csv_with("gdp_ncb,0.2,2\n")), ParseError);
  EXPECT_THROW(
      parse_regret_csv(csv_with("gdp_ncb,x,2,50,50,0.5,0,0.49,0.01,0,1\n")),
      ParseError);
}

TEST(RenderPlotTest, OnePolylinePerSeries) {
  const PlotOutput out = render_plot(parse_regret_csv(kTwoSeries), {});
  EXPECT_EQ(out.series, 2);
  EXPECT_EQ(count(out.svg, "<polyline"), 2);
  EXPECT_NE(out.svg.find("gdp_ncb eps=0.2"), std::string::npos);
  EXPECT_TRUE(out.warnings.empty());
  EXPECT_EQ(out.svg.rfind("<svg", 0), 0u);
  EXPECT_NE(out.svg.find("</svg>"), std::string::npos);
}

TEST(RenderPlotTest, Deterministic) {
  const auto rows = parse_regret_csv(kTwoSeries);
  PlotSpec spec;
  spec.log_log = true;
  EXPECT_EQ(render_plot(rows, spec).svg, render_plot(rows, spec).svg);
}

TEST(RenderPlotTest, LogLogClampsZero) {
  const auto rows =
      parse_regret_csv(csv_with("ncb,inf,2,50,50,0,0,0,0,0,1\n"
                                "ncb,inf,2,100,50,0.1,0,0.1,0,0,1\n"));
  PlotSpec spec;
  spec.log_log = true;
  const PlotOutput out = render_plot(rows, spec);
  ASSERT_EQ(out.warnings.size(), 1u);
  EXPECT_NE(out.warnings[0].find("T=50"), std::string::npos);
  EXPECT_EQ(out.svg.find("nan"), std::string::npos);
  EXPECT_EQ(out.svg.find("inf"), std::string::npos);
}

TEST(RenderPlotTest, EmptyInputThrows) {
  EXPECT_THROW(render_plot({}, {}), ParseError);
}

TEST(EmitPlotTest, WritesSvgFile) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "dpncb_plot_test";
  fs::remove_all(dir);
  write_text_file((dir / "r.csv").string(), kTwoSeries);
  const PlotOutput out =
      emit_plot((dir / "r.csv").string(), (dir / "r.svg").string(), {});
  EXPECT_TRUE(fs::exists(dir / "r.svg"));
  EXPECT_EQ(fs::file_size(dir / "r.svg"), out.svg.size());
  EXPECT_THROW(
      emit_plot((dir / "missing.csv").string(), (dir / "x.svg").string(), {}),
      IoError);
}

}  // namespace
}  // namespace dpncb
