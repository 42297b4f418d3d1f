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

// Brute-force reference answers over a grid of on-curve sample points.
//
// Every search here is exhaustive over the grid, so results upper-bound the
// continuous optima: a grid chain is a valid chain, not necessarily the best.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "curvemin/dlc.hpp"

namespace curvemin {

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  std::size_t samples_per_edge = 16;
  std::size_t max_points = 2000;
};

// t = r / g for r = 0..g-1 on every edge, plus the final vertex; canonical
// and strictly increasing. Throws InputError if g < 2 and CapacityError past
// spec.max_points.
std::vector<CurvePoint> GridPoints(const Polyline& curve, const GridSpec& spec);

// Fewest-link simplification with every chain point on the grid.
Simplification OracleMinSimplification(const Polyline& curve, double eps,
                                       const GridSpec& spec = {},
                                       double tol = kDefaultTolerance);

// Fewest-link DLC with every endpoint on the grid, starting at the first
// vertex.
Dlc OracleMinDlc(const Polyline& curve, double eps, const GridSpec& spec = {},
                 double tol = kDefaultTolerance);

// Which grid points are the final endpoint of some grid DLC, per link count.
struct OracleDlcReach {
  std::vector<CurvePoint> grid;
  // ends[d - 1][p]: grid[p] ends a d-link grid DLC (last link anywhere).
  std::vector<std::vector<bool>> ends;

  // Earliest grid point on closed edge e ending a d-link DLC.
  std::optional<CurvePoint> EarliestEnd(std::size_t edge,
                                        std::size_t links) const;
};

OracleDlcReach OracleDlcEnds(const Polyline& curve, double eps,
                             std::size_t rows, const GridSpec& spec = {},
                             double tol = kDefaultTolerance);

// Earliest-ending valid link between start_lb's edge and end_edge, with the
// start sampled at the grid (plus start_lb and the next vertex) and the end
// at t = r / g, r = 0..g.
std::optional<Link> OracleMinEndpointLink(const Polyline& curve,
                                          const CurvePoint& start_lb,
                                          std::size_t end_edge, double eps,
                                          std::size_t samples_per_edge,
                                          double tol = kDefaultTolerance);

}  // namespace curvemin
