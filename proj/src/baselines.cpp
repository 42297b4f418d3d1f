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

#include "curvemin/baselines.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace curvemin {

namespace {

void SplitFarthest(const Polyline& curve, std::size_t first, std::size_t last,
                   double eps, std::vector<std::size_t>& kept) {
  if (last <= first + 1) return;
  const Segment chord{curve.vertex(first), curve.vertex(last)};
  std::size_t farthest = first + 1;
  double worst = -1.0;
  for (std::size_t k = first + 1; k < last; ++k) {
    const double d = DistPointSegment(curve.vertex(k), chord);
    if (d > worst) {
      worst = d;
      farthest = k;
    }
  }
  if (worst <= eps) return;
  SplitFarthest(curve, first, farthest, eps, kept);
  kept.push_back(farthest);
  SplitFarthest(curve, farthest, last, eps, kept);
}

Simplification FromVertices(const Polyline& curve,
                            const std::vector<std::size_t>& indices,
                            double eps) {
  Simplification simp;
  simp.epsilon = eps;
  for (const std::size_t k : indices)
    simp.chain.push_back(VertexPoint(curve, k));
  return simp;
}

}  // namespace

bool ShortcutGraph::HasEdge(std::size_t i, std::size_t j) const {
  const auto& next = successors[i];
  return std::binary_search(next.begin(), next.end(), j);
}

ShortcutGraph BuildShortcutGraph(const Polyline& curve, double eps,
                                 double tol) {
  const std::size_t n = curve.size();
  ShortcutGraph graph;
  graph.successors.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (IsValidLink(curve, VertexPoint(curve, i), VertexPoint(curve, j), eps,
                      tol))
        graph.successors[i].push_back(j);
    }
  }
  return graph;
}

Simplification DouglasPeucker(const Polyline& curve, double eps) {
  std::vector<std::size_t> kept{0};
  SplitFarthest(curve, 0, curve.size() - 1, eps, kept);
  kept.push_back(curve.size() - 1);
  return FromVertices(curve, kept, eps);
}

Simplification ImaiIri(const Polyline& curve, double eps, double tol) {
  const ShortcutGraph graph = BuildShortcutGraph(curve, eps, tol);
  const std::size_t n = curve.size();
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(n, kUnseen);
  parent[0] = 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const std::size_t j : graph.successors[i]) {
      if (parent[j] != kUnseen) continue;
      parent[j] = i;
      queue.push_back(j);
    }
  }
  std::vector<std::size_t> path{n - 1};
  while (path.back() != 0) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return FromVertices(curve, path, eps);
}

}  // namespace curvemin
