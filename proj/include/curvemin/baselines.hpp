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

// Vertex-restricted reference simplifiers.

#pragma once

#include <cstddef>
#include <vector>

#include "curvemin/feasibility.hpp"

namespace curvemin {

// Directed graph on vertex indices; (i, j) is present iff p_i -> p_j is a
// valid link. Adjacency lists are sorted.
struct ShortcutGraph {
  std::vector<std::vector<std::size_t>> successors;

  bool HasEdge(std::size_t i, std::size_t j) const;
};

ShortcutGraph BuildShortcutGraph(const Polyline& curve, double eps,
                                 double tol = kDefaultTolerance);

// Recursive split at the vertex farthest from the current segment (distance
// to the segment, first index on ties).
Simplification DouglasPeucker(const Polyline& curve, double eps);

// Fewest-link vertex subsequence: breadth-first search on the shortcut graph.
Simplification ImaiIri(const Polyline& curve, double eps,
                       double tol = kDefaultTolerance);

}  // namespace curvemin
