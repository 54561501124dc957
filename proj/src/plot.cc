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

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include "dpncb/errors.h"
#include "dpncb/experiment.h"

namespace dpncb {
namespace {

constexpr std::array<std::string_view, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

constexpr int kMargin = 60;

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(std::string_view s, std::size_t line_no) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" +
                     std::string(s) + "'");
  }
  return v;
}

template <typename Int>
Int parse_int(std::string_view s, std::size_t line_no) {
  Int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad integer '" +
                     std::string(s) + "'");
  }
  return v;
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<RegretReport> parse_regret_csv(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty CSV");
  std::string_view header = lines[0];
  if (!header.empty() && header.back() == '\r') header.remove_suffix(1);
  if (header != kCsvHeader) {
    throw ParseError("unexpected CSV header '" + std::string(header) + "'");
  }
  if (lines.size() == 1) throw ParseError("CSV has a header but no rows");
  std::vector<RegretReport> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto f = split(line, ',');
    if (f.size() != 11) {
      throw ParseError("line " + std::to_string(i + 1) +
                       ": expected 11 fields, got " + std::to_string(f.size()));
    }
    RegretReport r;
    r.algorithm = std::string(f[0]);
    r.epsilon = parse_double(f[1], i + 1);
    r.k = parse_int<std::size_t>(f[2], i + 1);
    r.horizon = parse_int<std::int64_t>(f[3], i + 1);
    r.runs = parse_int<std::int64_t>(f[4], i + 1);
    r.nash_regret = parse_double(f[5], i + 1);
    r.nash_regret_std = parse_double(f[6], i + 1);
    r.average_regret = parse_double(f[7], i + 1);
    r.average_regret_std = parse_double(f[8], i + 1);
    r.floored_rounds = parse_int<std::int64_t>(f[9], i + 1);
    r.seed = parse_int<std::uint64_t>(f[10], i + 1);
    rows.push_back(std::move(r));
  }
  return rows;
}

PlotOutput render_plot(const std::vector<RegretReport>& rows,
                       const PlotSpec& spec) {
  if (rows.empty()) throw ParseError("nothing to plot");
  PlotOutput out;

  // Series keyed by (algorithm, eps) in order of first appearance.
  std::vector<std::pair<std::string, double>> keys;
  std::map<std::pair<std::string, double>,
           std::vector<std::pair<double, double>>>
      series;
  for (const RegretReport& r : rows) {
    const auto key = std::make_pair(r.algorithm, r.epsilon);
    if (!series.contains(key)) keys.push_back(key);
    double y = r.nash_regret;
    if (spec.log_log && !(y >= spec.log_floor)) {
      out.warnings.push_back(
          "clamped " + r.algorithm + " T=" + std::to_string(r.horizon) +
          " value " + fmt(y) + " to the axis floor " + fmt(spec.log_floor));
      y = spec.log_floor;
    }
    series[key].emplace_back(static_cast<double>(r.horizon), y);
  }

  auto tx = [&](double x) { return spec.log_log ? std::log10(x) : x; };
  auto ty = [&](double y) { return spec.log_log ? std::log10(y) : y; };
  constexpr double kInf = std::numeric_limits<double>::infinity();
  double x_lo = kInf, x_hi = -kInf, y_lo = kInf, y_hi = -kInf;
  for (const auto& [key, pts] : series) {
    for (const auto& [x, y] : pts) {
      x_lo = std::min(x_lo, tx(x));
      x_hi = std::max(x_hi, tx(x));
      y_lo = std::min(y_lo, ty(y));
      y_hi = std::max(y_hi, ty(y));
    }
  }
  if (!spec.log_log) y_lo = std::min(y_lo, 0.0);
  if (x_hi == x_lo) x_hi = x_lo + 1.0;
  if (y_hi == y_lo) y_hi = y_lo + 1.0;

  const double plot_w = spec.width - 2.0 * kMargin;
  const double plot_h = spec.height - 2.0 * kMargin;
  auto px = [&](double x) {
    return kMargin + (tx(x) - x_lo) / (x_hi - x_lo) * plot_w;
  };
  auto py = [&](double y) {
    return spec.height - kMargin - (ty(y) - y_lo) / (y_hi - y_lo) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width
      << ' ' << spec.height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << spec.width / 2 << "\" y=\"" << kMargin / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">"
      << escape(spec.title) << "</text>\n";
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << spec.height - kMargin
      << "\" x2=\"" << spec.width - kMargin << "\" y2=\""
      << spec.height - kMargin << "\"/>\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\""
      << kMargin << "\" y2=\"" << spec.height - kMargin << "\"/>\n</g>\n";

  const std::string scale = spec.log_log ? " (log10)" : "";
  svg << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<text x=\"" << kMargin << "\" y=\"" << spec.height - kMargin + 16
      << "\">" << fmt(spec.log_log ? std::pow(10.0, x_lo) : x_lo)
      << "</text>\n";
  svg << "<text x=\"" << spec.width - kMargin << "\" y=\""
      << spec.height - kMargin + 16 << "\" text-anchor=\"end\">"
      << fmt(spec.log_log ? std::pow(10.0, x_hi) : x_hi) << "</text>\n";
  svg << "<text x=\"" << spec.width / 2 << "\" y=\"" << spec.height - 15
      << "\" text-anchor=\"middle\">T" << scale << "</text>\n";
  svg << "<text x=\"" << kMargin - 4 << "\" y=\"" << spec.height - kMargin
      << "\" text-anchor=\"end\">"
      << fmt(spec.log_log ? std::pow(10.0, y_lo) : y_lo) << "</text>\n";
  svg << "<text x=\"" << kMargin - 4 << "\" y=\"" << kMargin + 4
      << "\" text-anchor=\"end\">"
      << fmt(spec.log_log ? std::pow(10.0, y_hi) : y_hi) << "</text>\n";
  svg << "<text x=\"15\" y=\"" << spec.height / 2
      << "\" transform=\"rotate(-90 15 " << spec.height / 2
      << ")\" text-anchor=\"middle\">nash_regret" << scale << "</text>\n";
  svg << "</g>\n";

  int index = 0;
  for (const auto& key : keys) {
    auto pts = series[key];
    std::stable_sort(pts.begin(), pts.end());
    const std::string_view color = kPalette[index % kPalette.size()];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0) svg << ' ';
      svg << fmt(px(pts[i].first)) << ',' << fmt(py(pts[i].second));
    }
    svg << "\"/>\n";
    const std::string label =
        key.first + (std::isinf(key.second) ? "" : " eps=" + fmt(key.second));
    svg << "<text x=\"" << kMargin + 8 << "\" y=\""
        << kMargin + 14 * (index + 1) << "\" font-family=\"sans-serif\" "
        << "font-size=\"11\" fill=\"" << color << "\">" << escape(label)
        << "</text>\n";
    ++index;
  }
  svg << "</svg>\n";
  out.svg = svg.str();
  out.series = index;
  return out;
}

PlotOutput emit_plot(const std::string& csv_path, const std::string& svg_path,
                     const PlotSpec& spec) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + csv_path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  PlotOutput out = render_plot(parse_regret_csv(text.str()), spec);
  write_text_file(svg_path, out.svg);
  return out;
}

}  // namespace dpncb
