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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvemin/curve.hpp"

namespace curvemin {

// A segment between two points of the curve, start <= end in curve order.
struct Link {
  CurvePoint start;
  CurvePoint end;
  double epsilon = 0.0;

  friend bool operator==(const Link&, const Link&) = default;
};

// Segment from embed(x) to embed(y).
Segment LinkSegment(const Polyline& curve, const CurvePoint& x,
                    const CurvePoint& y);

// A segment x->y is a valid link iff it meets the closed eps-disk around
// every vertex in InteriorVertices(x, y). Throws OrderingError if y < x.
bool IsValidLink(const Polyline& curve, const CurvePoint& x,
                 const CurvePoint& y, double eps,
                 double tol = kDefaultTolerance);

inline bool IsValidLink(const Polyline& curve, const Link& link,
                        double tol = kDefaultTolerance) {
  return IsValidLink(curve, link.start, link.end, link.epsilon, tol);
}

// Same predicate phrased as "every interior vertex lies in the
// eps-neighbourhood of the segment".
bool VerticesInSegmentNeighbourhood(const Polyline& curve, const CurvePoint& x,
                                    const CurvePoint& y, double eps,
                                    double tol = kDefaultTolerance);

struct HausdorffMeasure {
  double distance = 0.0;
  // Vertex attaining the distance; empty when it is attained (only) at an
  // end of the subcurve.
  std::optional<std::size_t> worst_vertex;
};

// Directed Hausdorff distance from the subcurve between x and y to the
// segment x->y. Distance to a segment is convex along each edge, so the
// maximum sits at a vertex or at x / y.
HausdorffMeasure MeasureSubcurve(const Polyline& curve, const CurvePoint& x,
                                 const CurvePoint& y);

inline double DirectedHausdorffToSegment(const Polyline& curve,
                                         const CurvePoint& x,
                                         const CurvePoint& y) {
  return MeasureSubcurve(curve, x, y).distance;
}

// An on-curve chain from the first to the last vertex.
struct Simplification {
  std::vector<CurvePoint> chain;
  double epsilon = 0.0;
  // Size of the disjoint link chain it was assembled from, if any.
  std::optional<std::size_t> dlc_size;

  std::size_t link_count() const {
    return chain.empty() ? 0 : chain.size() - 1;
  }
};

struct LinkReport {
  CurvePoint start;
  CurvePoint end;
  double distance = 0.0;
  std::optional<std::size_t> worst_vertex;
};

struct VerificationReport {
  double epsilon = 0.0;
  double tolerance = kDefaultTolerance;
  std::vector<LinkReport> links;
  std::vector<std::string> errors;
  bool passed = false;

  double MaxDistance() const;
};

// Checks that chain runs from the first to the last vertex in curve order and
// that every link is within eps + tol. Structural problems are listed in
// errors rather than thrown.
VerificationReport VerifySimplification(const Polyline& curve,
                                        const std::vector<CurvePoint>& chain,
                                        double eps,
                                        double tol = kDefaultTolerance);

inline VerificationReport Verify(const Polyline& curve,
                                 const Simplification& simp,
                                 double tol = kDefaultTolerance) {
  return VerifySimplification(curve, simp.chain, simp.epsilon, tol);
}

}  // namespace curvemin
