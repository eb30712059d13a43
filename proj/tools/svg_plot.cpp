// Copyright 2026 The piswitch Authors
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

#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace piswitch::cli {

namespace {

constexpr double kWidth = 640, kHeight = 440;
constexpr double kLeft = 80, kRight = 20, kTop = 20, kBottom = 60;

}  // namespace

std::string loglog_svg(const std::vector<Series>& series, const std::string& x_label, const std::string& y_label) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series)
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      if (!(s.x[k] > 0) || !(s.y[k] > 0)) continue;
      x0 = std::min(x0, std::log10(s.x[k]));
      x1 = std::max(x1, std::log10(s.x[k]));
      y0 = std::min(y0, std::log10(s.y[k]));
      y1 = std::max(y1, std::log10(s.y[k]));
    }
  if (!(x1 >= x0)) x0 = 0, x1 = 1;
  if (!(y1 >= y0)) y0 = 0, y1 = 1;
  x0 = std::floor(x0), x1 = std::max(std::ceil(x1), x0 + 1);
  y0 = std::floor(y0), y1 = std::max(std::ceil(y1), y0 + 1);

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double lx) { return kLeft + (lx - x0) / (x1 - x0) * pw; };
  auto py = [&](double ly) { return kTop + (y1 - ly) / (y1 - y0) * ph; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double e = x0; e <= x1; e += 1) {
    o << "<line x1=\"" << px(e) << "\" y1=\"" << kTop << "\" x2=\"" << px(e) << "\" y2=\"" << kTop + ph
      << "\" stroke=\"#ddd\"/>\n";
    o << "<text x=\"" << px(e) << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">1e" << int(e) << "</text>\n";
  }
  for (double e = y0; e <= y1; e += 1) {
    o << "<line x1=\"" << kLeft << "\" y1=\"" << py(e) << "\" x2=\"" << kLeft + pw << "\" y2=\"" << py(e)
      << "\" stroke=\"#ddd\"/>\n";
    o << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(e) + 4 << "\" text-anchor=\"end\">1e" << int(e) << "</text>\n";
  }
  o << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
  o << "<text transform=\"translate(18," << kTop + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">" << y_label
    << "</text>\n";

  double legend_y = kTop + 18;
  for (const auto& s : series) {
    o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      if (s.x[k] > 0 && s.y[k] > 0) o << px(std::log10(s.x[k])) << "," << py(std::log10(s.y[k])) << " ";
    }
    o << "\"/>\n";
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      if (!(s.x[k] > 0 && s.y[k] > 0)) continue;
      o << "<circle cx=\"" << px(std::log10(s.x[k])) << "\" cy=\"" << py(std::log10(s.y[k])) << "\" r=\"3.5\" fill=\""
        << s.color << "\"/>\n";
    }
    o << "<text x=\"" << kLeft + pw - 10 << "\" y=\"" << legend_y << "\" text-anchor=\"end\" fill=\"" << s.color
      << "\">" << s.label << "</text>\n";
    legend_y += 16;
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace piswitch::cli
