// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#include "netevo/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

namespace netevo {

namespace {

// Qualitative palette; cycled when there are more tolerances than entries.
constexpr const char* kPalette[] = {
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759",
    "#b07aa1", "#76b7b2", "#edc948", "#9c755f",
};
constexpr size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string short_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

// Round the axis limit up to 1/2/5 x 10^k so tick labels stay tidy.
double nice_ceiling(double max_value) {
  if (max_value <= 0.0) return 1.0;
  const double exponent = std::floor(std::log10(max_value));
  const double base = std::pow(10.0, exponent);
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (max_value <= m * base * (1.0 + 1e-12)) return m * base;
  }
  return 10.0 * base;
}

}  // namespace

std::string render_figure_svg(const std::vector<ResultRow>& rows,
                              std::vector<std::string>* warnings) {
  if (rows.empty()) throw DataError("no result rows to plot");

  int max_pressure = rows.front().pressure;
  for (const ResultRow& row : rows) max_pressure = std::max(max_pressure, row.pressure);

  // Networks keep first-appearance order; tolerances are sorted ascending.
  std::vector<std::string> networks;
  std::set<double> tolerance_set;
  std::map<std::pair<std::string, double>, double> ratio_at;
  for (const ResultRow& row : rows) {
    if (row.pressure != max_pressure) continue;
    if (std::find(networks.begin(), networks.end(), row.network) == networks.end()) {
      networks.push_back(row.network);
    }
    tolerance_set.insert(row.tolerance);
    ratio_at[{row.network, row.tolerance}] = row.ratio;
  }
  const std::vector<double> tolerances(tolerance_set.begin(), tolerance_set.end());

  double max_ratio = 0.0;
  for (const auto& [key, ratio] : ratio_at) max_ratio = std::max(max_ratio, ratio);
  const double axis_top = nice_ceiling(max_ratio);

  // Layout.
  const double margin_left = 64.0, margin_right = 24.0;
  const double margin_top = 40.0, margin_bottom = 56.0;
  const double bar_width = 22.0, bar_gap = 4.0, group_gap = 36.0;
  const double plot_height = 300.0;
  const double group_width =
      static_cast<double>(tolerances.size()) * (bar_width + bar_gap) - bar_gap;
  const double plot_width =
      static_cast<double>(networks.size()) * (group_width + group_gap) - group_gap;
  const double legend_height = 18.0 * static_cast<double>(tolerances.size()) + 8.0;
  const double width = margin_left + plot_width + margin_right + 140.0;
  const double height =
      margin_top + plot_height + margin_bottom + std::max(0.0, legend_height - plot_height);
  const double base_y = margin_top + plot_height;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed2(width) +
         "\" height=\"" + fixed2(height) + "\" viewBox=\"0 0 " + fixed2(width) + " " +
         fixed2(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fixed2(margin_left) + "\" y=\"22\" font-family=\"sans-serif\" "
         "font-size=\"14\" fill=\"#222\">Mean value / mean weight at pressure " +
         std::to_string(max_pressure) + "</text>\n";

  // Y axis with 5 ticks and a light grid.
  for (int tick = 0; tick <= 5; ++tick) {
    const double frac = static_cast<double>(tick) / 5.0;
    const double y = base_y - frac * plot_height;
    svg += "<line x1=\"" + fixed2(margin_left) + "\" y1=\"" + fixed2(y) + "\" x2=\"" +
           fixed2(margin_left + plot_width) + "\" y2=\"" + fixed2(y) +
           "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + fixed2(margin_left - 6.0) + "\" y=\"" + fixed2(y + 4.0) +
           "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#444\" "
           "text-anchor=\"end\">" +
           xml_escape(short_number(frac * axis_top)) + "</text>\n";
  }
  svg += "<line x1=\"" + fixed2(margin_left) + "\" y1=\"" + fixed2(base_y) + "\" x2=\"" +
         fixed2(margin_left + plot_width) + "\" y2=\"" + fixed2(base_y) +
         "\" stroke=\"#222\" stroke-width=\"1\"/>\n";

  // Bars.
  for (size_t gi = 0; gi < networks.size(); ++gi) {
    const double group_x =
        margin_left + static_cast<double>(gi) * (group_width + group_gap);
    for (size_t ti = 0; ti < tolerances.size(); ++ti) {
      const auto it = ratio_at.find({networks[gi], tolerances[ti]});
      if (it == ratio_at.end()) {
        if (warnings) {
          warnings->push_back("missing cell: network=" + networks[gi] +
                              " t=" + short_number(tolerances[ti]) +
                              " at p=" + std::to_string(max_pressure));
        }
        continue;
      }
      const double h = axis_top > 0.0 ? it->second / axis_top * plot_height : 0.0;
      const double x = group_x + static_cast<double>(ti) * (bar_width + bar_gap);
      svg += "<rect x=\"" + fixed2(x) + "\" y=\"" + fixed2(base_y - h) + "\" width=\"" +
             fixed2(bar_width) + "\" height=\"" + fixed2(h) + "\" fill=\"" +
             kPalette[ti % kPaletteSize] + "\"><title>" + xml_escape(networks[gi]) +
             " t=" + xml_escape(short_number(tolerances[ti])) + " ratio=" +
             xml_escape(short_number(it->second)) + "</title></rect>\n";
    }
    svg += "<text x=\"" + fixed2(group_x + group_width / 2.0) + "\" y=\"" +
           fixed2(base_y + 18.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222\" "
           "text-anchor=\"middle\">" +
           xml_escape(networks[gi]) + "</text>\n";
  }

  // Legend: one swatch per tolerance.
  const double legend_x = margin_left + plot_width + 24.0;
  for (size_t ti = 0; ti < tolerances.size(); ++ti) {
    const double y = margin_top + static_cast<double>(ti) * 18.0;
    svg += "<rect x=\"" + fixed2(legend_x) + "\" y=\"" + fixed2(y) +
           "\" width=\"12\" height=\"12\" fill=\"" + kPalette[ti % kPaletteSize] + "\"/>\n";
    svg += "<text x=\"" + fixed2(legend_x + 18.0) + "\" y=\"" + fixed2(y + 10.0) +
           "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#222\">t = " +
           xml_escape(short_number(tolerances[ti])) + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

std::vector<std::string> emit_figure(const std::vector<ResultRow>& rows,
                                     const std::string& path) {
  std::vector<std::string> warnings;
  const std::string svg = render_figure_svg(rows, &warnings);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open " + path + " for writing");
  out << svg;
  if (!out) throw DataError("failed writing " + path);
  return warnings;
}

}  // namespace netevo
