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

#include "curvemin/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include <fmt/format.h>

namespace curvemin {

namespace {

constexpr auto kNone = std::numeric_limits<std::size_t>::max();

// valid[p][q - p] for q >= p.
class ValidityTable {
 public:
  ValidityTable(const Polyline& curve, const std::vector<CurvePoint>& grid,
                double eps, double tol)
      : rows_(grid.size()) {
    for (std::size_t p = 0; p < grid.size(); ++p) {
      rows_[p].reserve(grid.size() - p);
      for (std::size_t q = p; q < grid.size(); ++q)
        rows_[p].push_back(IsValidLink(curve, grid[p], grid[q], eps, tol));
    }
  }

  bool operator()(std::size_t p, std::size_t q) const {
    return q >= p && rows_[p][q - p];
  }

 private:
  std::vector<std::vector<bool>> rows_;
};

bool EndsOnLastEdge(const Polyline& curve, const CurvePoint& cp) {
  return cp.edge + 1 == curve.edge_count();
}

// Grid points r >= q that a DLC may jump to after ending at q.
std::vector<std::size_t> SameEdgeSuccessors(const Polyline& curve,
                                            const std::vector<CurvePoint>& grid,
                                            std::size_t q) {
  std::vector<std::size_t> out;
  for (std::size_t r = q; r < grid.size(); ++r) {
    if (!OnSameEdge(grid[q], grid[r], curve)) break;
    out.push_back(r);
  }
  return out;
}

}  // namespace

std::vector<CurvePoint> GridPoints(const Polyline& curve, const GridSpec& spec) {
  const std::size_t g = spec.samples_per_edge;
  if (g < 2) throw InputError("grid needs at least 2 samples per edge");
  const std::size_t total = curve.edge_count() * g + 1;
  if (total > spec.max_points)
    throw CapacityError(fmt::format(
        "grid of {} points exceeds the limit of {}", total, spec.max_points));
  std::vector<CurvePoint> grid;
  grid.reserve(total);
  for (std::size_t e = 0; e < curve.edge_count(); ++e) {
    for (std::size_t r = 0; r < g; ++r)
      grid.push_back({e, static_cast<double>(r) / static_cast<double>(g)});
  }
  grid.push_back(EndOf(curve));
  return grid;
}

Simplification OracleMinSimplification(const Polyline& curve, double eps,
                                       const GridSpec& spec, double tol) {
  const auto grid = GridPoints(curve, spec);
  std::vector<std::size_t> parent(grid.size(), kNone);
  parent[0] = 0;
  std::deque<std::size_t> queue{0};
  const std::size_t goal = grid.size() - 1;
  while (!queue.empty() && parent[goal] == kNone) {
    const std::size_t p = queue.front();
    queue.pop_front();
    for (std::size_t q = p + 1; q < grid.size(); ++q) {
      if (parent[q] != kNone) continue;
      if (!IsValidLink(curve, grid[p], grid[q], eps, tol)) continue;
      parent[q] = p;
      queue.push_back(q);
    }
  }
  Simplification simp;
  simp.epsilon = eps;
  for (std::size_t p = goal;; p = parent[p]) {
    simp.chain.push_back(grid[p]);
    if (p == 0) break;
  }
  std::reverse(simp.chain.begin(), simp.chain.end());
  return simp;
}

Dlc OracleMinDlc(const Polyline& curve, double eps, const GridSpec& spec,
                 double tol) {
  const auto grid = GridPoints(curve, spec);
  const std::size_t count = grid.size();
  const ValidityTable valid(curve, grid, eps, tol);

  // State 2p: a link may start at p. State 2p+1: a link ended at p.
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(2 * count, kInf);
  std::vector<std::size_t> parent(2 * count, kNone);
  std::deque<std::size_t> queue;
  dist[0] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t state = queue.front();
    queue.pop_front();
    const std::size_t p = state / 2;
    if (state % 2 == 0) {
      for (std::size_t q = p; q < count; ++q) {
        if (!valid(p, q) || dist[2 * q + 1] <= dist[state] + 1) continue;
        dist[2 * q + 1] = dist[state] + 1;
        parent[2 * q + 1] = state;
        queue.push_back(2 * q + 1);
      }
    } else {
      for (const std::size_t r : SameEdgeSuccessors(curve, grid, p)) {
        if (dist[2 * r] <= dist[state]) continue;
        dist[2 * r] = dist[state];
        parent[2 * r] = state;
        queue.push_front(2 * r);
      }
    }
  }

  std::size_t best = kNone;
  for (std::size_t q = 0; q < count; ++q) {
    if (!EndsOnLastEdge(curve, grid[q]) || dist[2 * q + 1] == kInf) continue;
    if (best == kNone || dist[2 * q + 1] < dist[best]) best = 2 * q + 1;
  }
  Dlc dlc;
  if (best == kNone) return dlc;
  for (std::size_t state = best; state != 0;) {
    const std::size_t from = parent[state];
    if (state % 2 == 1)
      dlc.links.push_back(Link{grid[from / 2], grid[state / 2], eps});
    state = from;
  }
  std::reverse(dlc.links.begin(), dlc.links.end());
  return dlc;
}

std::optional<CurvePoint> OracleDlcReach::EarliestEnd(std::size_t edge,
                                                      std::size_t links) const {
  const auto& row = ends.at(links - 1);
  for (std::size_t p = 0; p < grid.size(); ++p) {
    if (!row[p]) continue;
    const CurvePoint& cp = grid[p];
    if (cp.edge == edge || (cp.edge == edge + 1 && cp.t == 0.0)) return cp;
    if (cp.edge > edge + 1) break;
  }
  return std::nullopt;
}

OracleDlcReach OracleDlcEnds(const Polyline& curve, double eps,
                             std::size_t rows, const GridSpec& spec,
                             double tol) {
  OracleDlcReach reach;
  reach.grid = GridPoints(curve, spec);
  const auto& grid = reach.grid;
  const std::size_t count = grid.size();
  const ValidityTable valid(curve, grid, eps, tol);

  std::vector<bool> starts(count, false);
  starts[0] = true;
  for (std::size_t d = 1; d <= rows; ++d) {
    std::vector<bool> ends(count, false);
    for (std::size_t p = 0; p < count; ++p) {
      if (!starts[p]) continue;
      for (std::size_t q = p; q < count; ++q)
        if (valid(p, q)) ends[q] = true;
    }
    std::vector<bool> next(count, false);
    for (std::size_t q = 0; q < count; ++q) {
      if (!ends[q]) continue;
      for (const std::size_t r : SameEdgeSuccessors(curve, grid, q))
        next[r] = true;
    }
    reach.ends.push_back(std::move(ends));
    starts = std::move(next);
  }
  return reach;
}

std::optional<Link> OracleMinEndpointLink(const Polyline& curve,
                                          const CurvePoint& start_lb,
                                          std::size_t end_edge, double eps,
                                          std::size_t samples_per_edge,
                                          double tol) {
  const CurvePoint lb = Canonicalize(start_lb, curve);
  const double g = static_cast<double>(samples_per_edge);
  std::vector<CurvePoint> starts{lb};
  for (std::size_t r = 0; r <= samples_per_edge; ++r) {
    const double t = static_cast<double>(r) / g;
    if (t > lb.t) starts.push_back(Canonicalize({lb.edge, t}, curve));
  }
  std::optional<Link> best;
  for (std::size_t r = 0; r <= samples_per_edge; ++r) {
    const CurvePoint y =
        Canonicalize({end_edge, static_cast<double>(r) / g}, curve);
    for (auto it = starts.rbegin(); it != starts.rend(); ++it) {
      if (y < *it) continue;
      if (IsValidLink(curve, *it, y, eps, tol)) {
        best = Link{*it, y, eps};
        return best;
      }
    }
  }
  return best;
}

}  // namespace curvemin
