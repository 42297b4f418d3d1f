// Copyright 2026 The curvemin Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "curvemin/svg.hpp"

#include <algorithm>
#include <iterator>

#include <fmt/format.h>

namespace curvemin {

namespace {

// SVG y grows downwards; flip so the picture matches the curve coordinates.
struct Canvas {
  fmt::memory_buffer out;

  void Path(const char* cls, const Point& a, const Point& b) {
    fmt::format_to(std::back_inserter(out),
                   "  <path class=\"{}\" d=\"M {:.9g} {:.9g} L {:.9g} {:.9g}\"/>\n",
                   cls, a.x(), -a.y(), b.x(), -b.y());
  }
  void Circle(const char* cls, const Point& c, double r) {
    fmt::format_to(std::back_inserter(out),
                   "  <circle class=\"{}\" cx=\"{:.9g}\" cy=\"{:.9g}\" r=\"{:.9g}\"/>\n",
                   cls, c.x(), -c.y(), r);
  }
};

}  // namespace

std::string RenderSvg(const Polyline& curve,
                      const std::optional<Simplification>& simp,
                      double epsilon, const RenderOptions& options) {
  Point lo = curve.front();
  Point hi = curve.front();
  for (const auto& p : curve.vertices()) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double diagonal = (hi - lo).norm();
  const double margin = epsilon > 0.0 ? epsilon : 0.05 * diagonal;
  lo.array() -= margin;
  hi.array() += margin;
  const double width = hi.x() - lo.x();
  const double height = hi.y() - lo.y();
  const double stroke = options.stroke_scale * std::max(width, height) / 400.0;

  Canvas canvas;
  auto out = std::back_inserter(canvas.out);
  fmt::format_to(out,
                 "<svg xmlns=\"http://www.w3.org/2000/svg\" "
                 "viewBox=\"{:.9g} {:.9g} {:.9g} {:.9g}\">\n",
                 lo.x(), -hi.y(), width, height);
  fmt::format_to(out,
                 "<style>\n"
                 "  .neighbourhood {{ fill: #9ecae1; fill-opacity: 0.3; stroke: none; }}\n"
                 "  .edge {{ fill: none; stroke: #222222; stroke-width: {:.9g}; }}\n"
                 "  .link {{ fill: none; stroke: #d62728; stroke-width: {:.9g}; "
                 "stroke-dasharray: {:.9g} {:.9g}; }}\n"
                 "  .link-endpoint {{ fill: #d62728; stroke: none; }}\n"
                 "</style>\n",
                 stroke, stroke, 4 * stroke, 3 * stroke);

  if (options.show_disks && epsilon > 0.0) {
    for (const auto& p : curve.vertices())
      canvas.Circle("neighbourhood", p, epsilon);
  }
  for (std::size_t e = 0; e < curve.edge_count(); ++e)
    canvas.Path("edge", curve.vertex(e), curve.vertex(e + 1));
  if (simp) {
    for (std::size_t r = 0; r + 1 < simp->chain.size(); ++r)
      canvas.Path("link", Embed(simp->chain[r], curve),
                  Embed(simp->chain[r + 1], curve));
    for (const auto& cp : simp->chain)
      canvas.Circle("link-endpoint", Embed(cp, curve), 2.5 * stroke);
  }
  fmt::format_to(out, "</svg>\n");
  return fmt::to_string(canvas.out);
}

}  // namespace curvemin
