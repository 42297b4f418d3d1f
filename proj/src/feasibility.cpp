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

#include "curvemin/feasibility.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace curvemin {

Segment LinkSegment(const Polyline& curve, const CurvePoint& x,
                    const CurvePoint& y) {
  return {Embed(x, curve), Embed(y, curve)};
}

bool IsValidLink(const Polyline& curve, const CurvePoint& x,
                 const CurvePoint& y, double eps, double tol) {
  const auto interior = InteriorVertices(curve, x, y);
  const Segment s = LinkSegment(curve, x, y);
  return std::all_of(interior.begin(), interior.end(), [&](std::size_t k) {
    return SegmentIntersectsDisk(s, Disk{curve.vertex(k), eps}, tol);
  });
}

bool VerticesInSegmentNeighbourhood(const Polyline& curve, const CurvePoint& x,
                                    const CurvePoint& y, double eps,
                                    double tol) {
  const auto interior = InteriorVertices(curve, x, y);
  const Segment s = LinkSegment(curve, x, y);
  return std::all_of(interior.begin(), interior.end(), [&](std::size_t k) {
    return DistPointSegment(curve.vertex(k), s) <= eps + tol;
  });
}

HausdorffMeasure MeasureSubcurve(const Polyline& curve, const CurvePoint& x,
                                 const CurvePoint& y) {
  const auto interior = InteriorVertices(curve, x, y);
  const Segment s = LinkSegment(curve, x, y);
  // The subcurve ends coincide with the segment ends: distance zero.
  HausdorffMeasure measure;
  for (const std::size_t k : interior) {
    const double d = DistPointSegment(curve.vertex(k), s);
    if (d > measure.distance) {
      measure.distance = d;
      measure.worst_vertex = k;
    }
  }
  return measure;
}

double VerificationReport::MaxDistance() const {
  double worst = 0.0;
  for (const auto& l : links) worst = std::max(worst, l.distance);
  return worst;
}

VerificationReport VerifySimplification(const Polyline& curve,
                                        const std::vector<CurvePoint>& chain,
                                        double eps, double tol) {
  VerificationReport report;
  report.epsilon = eps;
  report.tolerance = tol;
  if (chain.size() < 2) {
    report.errors.push_back("chain needs at least two points");
    return report;
  }
  std::vector<CurvePoint> canonical;
  canonical.reserve(chain.size());
  for (std::size_t r = 0; r < chain.size(); ++r) {
    try {
      canonical.push_back(Canonicalize(chain[r], curve));
    } catch (const InputError& e) {
      report.errors.push_back(fmt::format("chain point {}: {}", r, e.what()));
    }
  }
  if (!report.errors.empty()) return report;
  if (canonical.front() != StartOf(curve))
    report.errors.push_back("chain does not start at the first vertex");
  if (canonical.back() != EndOf(curve))
    report.errors.push_back("chain does not end at the last vertex");
  for (std::size_t r = 0; r + 1 < canonical.size(); ++r) {
    const CurvePoint& x = canonical[r];
    const CurvePoint& y = canonical[r + 1];
    if (y < x) {
      report.errors.push_back(
          fmt::format("chain points {} and {} are out of curve order", r,
                      r + 1));
      continue;
    }
    const auto m = MeasureSubcurve(curve, x, y);
    report.links.push_back({x, y, m.distance, m.worst_vertex});
  }
  report.passed =
      report.errors.empty() &&
      std::all_of(report.links.begin(), report.links.end(),
                  [&](const LinkReport& l) { return l.distance <= eps + tol; });
  return report;
}

}  // namespace curvemin
