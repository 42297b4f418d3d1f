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

// Links between two edges of a curve, searched over a finite set of
// extremal supporting lines.
//
// For a span that starts on (a truncated) edge i and ends on edge j, a link
// with the earliest end point can always be moved onto a line that is pinned
// by two constraints among: tangency to the eps-disk of an interior vertex,
// or incidence with an anchor (a terminal-edge endpoint or a crossing of a
// disk boundary with a terminal edge). Enumerating those lines and filtering
// with IsValidLink gives the minimum.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "curvemin/feasibility.hpp"

namespace curvemin {

enum class AnchorOrigin { kEdgeEndpoint, kStartBound, kDiskEdgeIntersection };

struct AnchorPoint {
  Point location;
  CurvePoint position;
  AnchorOrigin origin = AnchorOrigin::kEdgeEndpoint;
  // Set for kDiskEdgeIntersection.
  std::optional<std::size_t> vertex;
  bool on_end_edge = false;
};

enum class CandidateKind { kBitangent, kPointTangent, kTwoAnchors };

struct CandidateLine {
  Line line;
  CandidateKind kind = CandidateKind::kTwoAnchors;
  // Vertex indices for kBitangent; anchor index + vertex for kPointTangent;
  // two anchor indices for kTwoAnchors.
  std::size_t first = 0;
  std::size_t second = 0;
};

// Endpoints of the truncated start edge [start_lb, vertex i+1] and of edge
// end_edge, plus every crossing of an interior vertex disk with those two.
std::vector<AnchorPoint> CollectAnchors(const Polyline& curve,
                                        const CurvePoint& start_lb,
                                        std::size_t end_edge, double eps,
                                        double tol = kDefaultTolerance);

// Deduplicated union of disk bitangents, anchor-to-disk tangents and
// anchor-pair lines, sorted by canonical line triple.
std::vector<CandidateLine> EnumerateCandidateLines(
    const Polyline& curve, const CurvePoint& start_lb, std::size_t end_edge,
    double eps, double tol = kDefaultTolerance);

// Valid link with start on the start edge at or after start_lb and end on
// end_edge, whose end is earliest in curve order; ties go to the latest
// start. Same-edge spans return the zero-length link at start_lb.
std::optional<Link> MinEndpointLink(const Polyline& curve,
                                    const CurvePoint& start_lb,
                                    std::size_t end_edge, double eps,
                                    double tol = kDefaultTolerance);

// As MinEndpointLink, with the link start pinned to `start`.
std::optional<Link> MinEndpointLinkFixedStart(const Polyline& curve,
                                              const CurvePoint& start,
                                              std::size_t end_edge, double eps,
                                              double tol = kDefaultTolerance);

}  // namespace curvemin
