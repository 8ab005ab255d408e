// Copyright (c) 2026 The actopt Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ACTOPT__SVG_HPP_
#define ACTOPT__SVG_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "actopt/costmap.hpp"
#include "actopt/scenario.hpp"

namespace actopt
{

namespace detail
{

inline std::string fmt2(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct SvgFrame
{
  GridGeometry g;
  double cell_px;

  double x(double wx) const {return (wx - (g.origin_x - 0.5 * g.resolution)) / g.resolution * cell_px;}
  double y(double wy) const
  {
    return (g.height - (wy - (g.origin_y - 0.5 * g.resolution)) / g.resolution) * cell_px;
  }
};

/// Light (slow) to dark (fast) blue.
inline std::string speed_color(double t)
{
  t = std::clamp(t, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(158 + (8 - 158) * t));
  const int g = static_cast<int>(std::lround(202 + (48 - 202) * t));
  const int b = static_cast<int>(std::lround(225 + (107 - 225) * t));
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
  return buf;
}

inline std::string xml_escape(const std::string & text)
{
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace detail

/// Standalone SVG: costmap as grayscale underlay, base path in red, optimized
/// path colored by speed, start and goal markers.
inline void render_svg(const RunResult & result, const CostMap & map, std::ostream & out)
{
  const GridGeometry & g = map.geometry;
  const detail::SvgFrame f{g, 800.0 / std::max(g.width, g.height)};
  const double w_px = g.width * f.cell_px;
  const double h_px = g.height * f.cell_px;
  using detail::fmt2;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt2(w_px) << "\" height=\"" <<
    fmt2(h_px) << "\" viewBox=\"0 0 " << fmt2(w_px) << ' ' << fmt2(h_px) << "\">\n";
  out << "<title>" << detail::xml_escape(result.scenario) << "</title>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << fmt2(w_px) << "\" height=\"" << fmt2(h_px) <<
    "\" fill=\"#ffffff\"/>\n";

  // costmap, run-length encoded per row over 16 gray levels
  out << "<g id=\"costmap\" shape-rendering=\"crispEdges\">\n";
  const double scale = map.hard_threshold > 0.0 ? map.hard_threshold : 1.0;
  for (int row = 0; row < g.height; ++row) {
    int col = 0;
    while (col < g.width) {
      const auto level = [&](int c) {
          const double v = std::clamp(map.cost(c, row) / scale, 0.0, 1.0);
          return static_cast<int>(std::lround(v * 15.0));
        };
      const int q = level(col);
      int end = col + 1;
      while (end < g.width && level(end) == q) {
        ++end;
      }
      if (q > 0) {
        const int shade = 235 - q * 14;
        out << "<rect x=\"" << fmt2(col * f.cell_px) << "\" y=\"" <<
          fmt2((g.height - 1 - row) * f.cell_px) << "\" width=\"" <<
          fmt2((end - col) * f.cell_px) << "\" height=\"" << fmt2(f.cell_px) <<
          "\" fill=\"rgb(" << shade << ',' << shade << ',' << shade << ")\"/>\n";
      }
      col = end;
    }
  }
  out << "</g>\n";

  const double stroke = std::max(1.0, 0.15 / g.resolution * f.cell_px);
  if (result.base_path.poses.size() >= 2) {
    out << "<polyline id=\"base_path\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"" <<
      fmt2(stroke) << "\" points=\"";
    for (std::size_t i = 0; i < result.base_path.poses.size(); ++i) {
      const auto & p = result.base_path.poses[i];
      out << (i ? " " : "") << fmt2(f.x(p.x)) << ',' << fmt2(f.y(p.y));
    }
    out << "\"/>\n";
  }

  const auto & opt = result.optimized_path.poses;
  if (opt.size() >= 2) {
    double v_top = 0.0;
    for (double v : result.profile.speeds) {
      v_top = std::max(v_top, v);
    }
    out << "<g id=\"optimized_path\" stroke-width=\"" << fmt2(stroke) <<
      "\" stroke-linecap=\"round\">\n";
    for (std::size_t i = 0; i + 1 < opt.size(); ++i) {
      const double v = i < result.profile.speeds.size() ? result.profile.speeds[i] : 0.0;
      out << "<line x1=\"" << fmt2(f.x(opt[i].x)) << "\" y1=\"" << fmt2(f.y(opt[i].y)) <<
        "\" x2=\"" << fmt2(f.x(opt[i + 1].x)) << "\" y2=\"" << fmt2(f.y(opt[i + 1].y)) <<
        "\" stroke=\"" << detail::speed_color(v_top > 0.0 ? v / v_top : 0.0) << "\"/>\n";
    }
    out << "</g>\n";
    out << "<circle id=\"start\" cx=\"" << fmt2(f.x(result.start.x)) << "\" cy=\"" <<
      fmt2(f.y(result.start.y)) << "\" r=\"" << fmt2(2.0 * stroke) << "\" fill=\"#2ca02c\"/>\n";
  }

  const double goal_r = std::max(3.0, 0.5 / g.resolution * f.cell_px);
  out << "<circle id=\"goal\" cx=\"" << fmt2(f.x(result.goal.x)) << "\" cy=\"" <<
    fmt2(f.y(result.goal.y)) << "\" r=\"" << fmt2(goal_r) << "\" fill=\"#e377c2\"/>\n";
  out << "</svg>\n";
  out.flush();
  if (!out) {
    throw Error("failed to write SVG output");
  }
}

}  // namespace actopt

#endif  // ACTOPT__SVG_HPP_
