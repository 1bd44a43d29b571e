// Copyright 2026 The doflab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOFLAB_SVG_HPP
#define DOFLAB_SVG_HPP

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doflab/rational.hpp"

namespace doflab::svg {

// Presentation only; nothing numeric is ever read back from these files.

struct Polygon {
  std::vector<RationalVector> vertices;  // 2-D, any order
  std::string label;
  std::string color = "#1f77b4";
};

struct Line {  // a d1 + b d2 = c
  Rational a, b, c;
  std::string label;
};

struct Marker {
  RationalVector at;
  std::string label;
};

struct Figure {
  double extent = 1.0;  // axis length in DoF units
  std::string title;
  std::vector<Polygon> polygons;
  std::vector<Line> lines;
  std::vector<Marker> markers;
};

namespace detail {
inline std::vector<std::pair<double, double>> ordered(const std::vector<RationalVector>& pts) {
  std::vector<std::pair<double, double>> p;
  for (const auto& v : pts) p.emplace_back(v.at(0).to_double(), v.at(1).to_double());
  if (p.empty()) return p;
  double cx = 0, cy = 0;
  for (auto [x, y] : p) cx += x, cy += y;
  cx /= static_cast<double>(p.size());
  cy /= static_cast<double>(p.size());
  std::sort(p.begin(), p.end(), [&](auto l, auto r) {
    return std::atan2(l.second - cy, l.first - cx) < std::atan2(r.second - cy, r.first - cx);
  });
  return p;
}
}  // namespace detail

inline std::string render(const Figure& f) {
  const double size = 480, margin = 50, span = size - 2 * margin;
  const double ext = f.extent > 0 ? f.extent : 1.0;
  auto sx = [&](double x) { return margin + span * x / ext; };
  auto sy = [&](double y) { return size - margin - span * y / ext; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!f.title.empty())
    os << "<text x=\"" << size / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << f.title << "</text>\n";
  for (int g = 0; g <= static_cast<int>(std::ceil(ext)); ++g) {
    os << "<line x1=\"" << sx(g) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(g) << "\" y2=\"" << sy(ext)
       << "\" stroke=\"#ddd\"/>\n";
    os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(g) << "\" x2=\"" << sx(ext) << "\" y2=\"" << sy(g)
       << "\" stroke=\"#ddd\"/>\n";
    os << "<text x=\"" << sx(g) << "\" y=\"" << sy(0) + 16 << "\" font-size=\"10\" text-anchor=\"middle\">" << g
       << "</text>\n";
    os << "<text x=\"" << sx(0) - 8 << "\" y=\"" << sy(g) + 4 << "\" font-size=\"10\" text-anchor=\"end\">" << g
       << "</text>\n";
  }
  os << "<text x=\"" << sx(ext) << "\" y=\"" << sy(0) + 32 << "\" font-size=\"12\">d1</text>\n";
  os << "<text x=\"" << sx(0) - 30 << "\" y=\"" << sy(ext) << "\" font-size=\"12\">d2</text>\n";

  for (const auto& poly : f.polygons) {
    os << "<polygon fill=\"" << poly.color << "\" fill-opacity=\"0.15\" stroke=\"" << poly.color << "\" points=\"";
    for (auto [x, y] : detail::ordered(poly.vertices)) os << sx(x) << "," << sy(y) << " ";
    os << "\"><title>" << poly.label << "</title></polygon>\n";
  }
  for (const auto& l : f.lines) {
    // Segment between the axis intercepts that exist.
    std::vector<std::pair<double, double>> ends;
    if (!l.a.is_zero()) ends.emplace_back((l.c / l.a).to_double(), 0.0);
    if (!l.b.is_zero()) ends.emplace_back(0.0, (l.c / l.b).to_double());
    if (ends.size() < 2) continue;
    os << "<line x1=\"" << sx(ends[0].first) << "\" y1=\"" << sy(ends[0].second) << "\" x2=\"" << sx(ends[1].first)
       << "\" y2=\"" << sy(ends[1].second) << "\" stroke=\"#d62728\" stroke-dasharray=\"4 3\"/>\n";
    const double mx = (ends[0].first + ends[1].first) / 2, my = (ends[0].second + ends[1].second) / 2;
    os << "<text x=\"" << sx(mx) + 4 << "\" y=\"" << sy(my) - 4 << "\" font-size=\"12\" fill=\"#d62728\">" << l.label
       << "</text>\n";
  }
  for (const auto& m : f.markers) {
    const double x = m.at.at(0).to_double(), y = m.at.at(1).to_double();
    os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"4\" fill=\"black\"/>\n";
    os << "<text x=\"" << sx(x) + 6 << "\" y=\"" << sy(y) - 6 << "\" font-size=\"12\">" << m.label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace doflab::svg

#endif  // DOFLAB_SVG_HPP
