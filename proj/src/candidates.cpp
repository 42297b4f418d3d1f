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

#include "curvemin/candidates.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace curvemin {

namespace {

// Tolerance for treating two computed lines as the same line.
constexpr double kLineMergeTol = 1e-12;

// The start edge from start_lb to the next vertex.
Segment TruncatedStartEdge(const Polyline& curve, const CurvePoint& lb) {
  return {Embed(lb, curve), curve.vertex(lb.edge + 1)};
}

// Maps a parameter on the truncated start edge back to the edge parameter.
double StartEdgeParameter(const CurvePoint& lb, double s) {
  return s == 1.0 ? 1.0 : lb.t + s * (1.0 - lb.t);
}

// Spans that need no search: start and end on the same edge. Returns the
// zero-length link at lb, or throws when end_edge lies before lb.
std::optional<Link> TrivialSpan(const Polyline& curve, const CurvePoint& lb,
                                std::size_t end_edge, double eps) {
  if (end_edge >= curve.edge_count())
    throw InputError(fmt::format("end edge {} out of range", end_edge));
  if (lb.edge == end_edge) return Link{lb, lb, eps};
  // A shared vertex also belongs to the edge before it.
  if (lb.edge == end_edge + 1 && lb.t == 0.0) return Link{lb, lb, eps};
  if (lb.edge > end_edge)
    throw OrderingError(
        fmt::format("end edge {} precedes start edge {}", end_edge, lb.edge));
  return std::nullopt;
}

void Deduplicate(std::vector<CandidateLine>& lines) {
  std::stable_sort(lines.begin(), lines.end(),
                   [](const CandidateLine& l, const CandidateLine& r) {
                     return l.line < r.line;
                   });
  std::vector<CandidateLine> unique;
  unique.reserve(lines.size());
  for (const auto& c : lines) {
    if (!unique.empty() && unique.back().line.ApproxEqual(c.line, kLineMergeTol))
      continue;
    unique.push_back(c);
  }
  lines = std::move(unique);
}

// Tracks the best link seen so far: earliest end, then latest start. Input
// order breaks exact ties, so callers feed candidates in canonical order.
class BestLink {
 public:
  void Offer(const CurvePoint& x, const CurvePoint& y) {
    if (!best_ || y < best_->end || (y == best_->end && best_->start < x))
      best_ = Link{x, y, 0.0};
  }
  std::optional<Link> Take(double eps) {
    if (best_) best_->epsilon = eps;
    return best_;
  }

 private:
  std::optional<Link> best_;
};

}  // namespace

std::vector<AnchorPoint> CollectAnchors(const Polyline& curve,
                                        const CurvePoint& start_lb,
                                        std::size_t end_edge, double eps,
                                        double tol) {
  const CurvePoint lb = Canonicalize(start_lb, curve);
  std::vector<AnchorPoint> anchors;
  if (TrivialSpan(curve, lb, end_edge, eps)) {
    const std::size_t e = std::min(lb.edge, end_edge);
    anchors.push_back({Embed(lb, curve), lb, AnchorOrigin::kStartBound, {},
                       false});
    anchors.push_back({curve.vertex(e + 1), Canonicalize({e, 1.0}, curve),
                       AnchorOrigin::kEdgeEndpoint, {}, true});
    return anchors;
  }
  const Segment start = TruncatedStartEdge(curve, lb);
  const Segment end = curve.edge(end_edge);
  const CurvePoint next_vertex = Canonicalize({lb.edge, 1.0}, curve);

  anchors.push_back({start.a, lb, AnchorOrigin::kStartBound, {}, false});
  anchors.push_back(
      {start.b, next_vertex, AnchorOrigin::kEdgeEndpoint, {}, false});
  anchors.push_back({end.a, {end_edge, 0.0}, AnchorOrigin::kEdgeEndpoint, {},
                     true});
  anchors.push_back({end.b, Canonicalize({end_edge, 1.0}, curve),
                     AnchorOrigin::kEdgeEndpoint, {}, true});

  for (std::size_t k = lb.edge + 1; k <= end_edge; ++k) {
    const Disk disk{curve.vertex(k), eps};
    for (const double s : CircleSegmentParameters(disk, start, tol)) {
      const CurvePoint cp =
          Canonicalize({lb.edge, StartEdgeParameter(lb, s)}, curve);
      anchors.push_back({start.at(s), cp,
                         AnchorOrigin::kDiskEdgeIntersection, k, false});
    }
    for (const double t : CircleSegmentParameters(disk, end, tol)) {
      const CurvePoint cp = Canonicalize({end_edge, t}, curve);
      anchors.push_back({end.at(t), cp, AnchorOrigin::kDiskEdgeIntersection,
                         k, true});
    }
  }
  return anchors;
}

std::vector<CandidateLine> EnumerateCandidateLines(const Polyline& curve,
                                                   const CurvePoint& start_lb,
                                                   std::size_t end_edge,
                                                   double eps, double tol) {
  const CurvePoint lb = Canonicalize(start_lb, curve);
  const auto anchors = CollectAnchors(curve, lb, end_edge, eps, tol);
  std::vector<CandidateLine> lines;

  const bool trivial = TrivialSpan(curve, lb, end_edge, eps).has_value();
  const std::size_t first_vertex = lb.edge + 1;
  const std::size_t last_vertex = trivial ? lb.edge : end_edge;

  for (std::size_t k = first_vertex; k <= last_vertex; ++k) {
    for (std::size_t l = k + 1; l <= last_vertex; ++l) {
      for (const Line& line : BitangentLines(Disk{curve.vertex(k), eps},
                                             Disk{curve.vertex(l), eps}, tol))
        lines.push_back({line, CandidateKind::kBitangent, k, l});
    }
  }
  for (std::size_t a = 0; a < anchors.size(); ++a) {
    for (std::size_t k = first_vertex; k <= last_vertex; ++k) {
      for (const Line& line : TangentLinesPointCircle(
               anchors[a].location, Disk{curve.vertex(k), eps}, tol))
        lines.push_back({line, CandidateKind::kPointTangent, a, k});
    }
  }
  for (std::size_t a = 0; a < anchors.size(); ++a) {
    for (std::size_t b = a + 1; b < anchors.size(); ++b) {
      if ((anchors[a].location - anchors[b].location).norm() <= tol) continue;
      if (auto line =
              Line::Through(anchors[a].location, anchors[b].location))
        lines.push_back({*line, CandidateKind::kTwoAnchors, a, b});
    }
  }
  Deduplicate(lines);
  return lines;
}

std::optional<Link> MinEndpointLink(const Polyline& curve,
                                    const CurvePoint& start_lb,
                                    std::size_t end_edge, double eps,
                                    double tol) {
  const CurvePoint lb = Canonicalize(start_lb, curve);
  if (auto trivial = TrivialSpan(curve, lb, end_edge, eps)) return trivial;

  const Segment start = TruncatedStartEdge(curve, lb);
  const Segment end = curve.edge(end_edge);
  BestLink best;
  for (const auto& candidate :
       EnumerateCandidateLines(curve, lb, end_edge, eps, tol)) {
    // A line containing the start edge clips to start_lb (parameter 0).
    const auto s = LineSegmentParameter(candidate.line, start, tol);
    if (!s) continue;
    const auto t = LineSegmentParameter(candidate.line, end, tol);
    if (!t) continue;
    const CurvePoint x =
        Canonicalize({lb.edge, StartEdgeParameter(lb, *s)}, curve);
    const CurvePoint y = Canonicalize({end_edge, *t}, curve);
    if (y < x) continue;
    if (IsValidLink(curve, x, y, eps, tol)) best.Offer(x, y);
  }
  return best.Take(eps);
}

std::optional<Link> MinEndpointLinkFixedStart(const Polyline& curve,
                                              const CurvePoint& start,
                                              std::size_t end_edge, double eps,
                                              double tol) {
  const CurvePoint x = Canonicalize(start, curve);
  if (auto trivial = TrivialSpan(curve, x, end_edge, eps)) return trivial;

  const Point origin = Embed(x, curve);
  const Segment end = curve.edge(end_edge);
  std::vector<Line> lines;
  for (std::size_t k = x.edge + 1; k <= end_edge; ++k) {
    for (const Line& line :
         TangentLinesPointCircle(origin, Disk{curve.vertex(k), eps}, tol))
      lines.push_back(line);
  }
  for (const auto& anchor : CollectAnchors(curve, x, end_edge, eps, tol)) {
    if (!anchor.on_end_edge || (anchor.location - origin).norm() <= tol)
      continue;
    if (auto line = Line::Through(origin, anchor.location))
      lines.push_back(*line);
  }
  std::sort(lines.begin(), lines.end());

  BestLink best;
  for (const Line& line : lines) {
    const auto t = LineSegmentParameter(line, end, tol);
    if (!t) continue;
    const CurvePoint y = Canonicalize({end_edge, *t}, curve);
    if (y < x) continue;
    if (IsValidLink(curve, x, y, eps, tol)) best.Offer(x, y);
  }
  return best.Take(eps);
}

}  // namespace curvemin
