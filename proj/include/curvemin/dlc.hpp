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

// Minimum disjoint link chains and the 2-approximate curve-restricted
// simplification built from them.
//
// A disjoint link chain (DLC) is a sequence of valid links in curve order,
// where each link ends on the same input edge as the next one starts. Every
// simplification is a DLC, so the smallest DLC size k lower-bounds the
// optimum; joining consecutive DLC links along the curve gives a
// simplification with at most 2k links.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "curvemin/feasibility.hpp"

namespace curvemin {

struct Dlc {
  std::vector<Link> links;

  std::size_t size() const { return links.size(); }
};

// Checks the chain invariants: first link starts at the first vertex, last
// link ends on the last edge, every link is valid, consecutive links are
// joined on one edge, and all endpoints are in curve order.
bool IsValidDlc(const Polyline& curve, const Dlc& dlc, double eps,
                double tol = kDefaultTolerance);

// Dynamic programming tables indexed by (end edge e, link count d >= 1).
// Cell (e, d) holds the first point on edge e at which a d-link chain over
// the prefix ending with edge e can end, together with the last link and
// the edge the previous link ended on.
class DpTables {
 public:
  struct Cell {
    CurvePoint first_end;
    Link link;
    std::optional<std::size_t> predecessor;
  };

  DpTables(std::size_t edge_count, std::size_t rows)
      : edge_count_(edge_count),
        cells_(edge_count * rows) {}

  std::size_t edge_count() const { return edge_count_; }
  std::size_t rows() const { return edge_count_ ? cells_.size() / edge_count_ : 0; }

  const std::optional<Cell>& at(std::size_t edge, std::size_t links) const {
    return cells_[(links - 1) * edge_count_ + edge];
  }
  std::optional<Cell>& at(std::size_t edge, std::size_t links) {
    return cells_[(links - 1) * edge_count_ + edge];
  }

  void AddRow() { cells_.resize(cells_.size() + edge_count_); }

 private:
  std::size_t edge_count_;
  std::vector<std::optional<Cell>> cells_;
};

struct DpOptions {
  double tol = kDefaultTolerance;
  // Rows to fill. Zero fills until the last edge is reached.
  std::size_t rows = 0;
};

DpTables FillTables(const Polyline& curve, double eps,
                    const DpOptions& options = {});

// Follows the stored links back from cell (edge, links).
Dlc Reconstruct(const DpTables& tables, std::size_t edge, std::size_t links);

// A minimum-size DLC whose first link starts at the first vertex.
std::optional<Dlc> MinDlc(const Polyline& curve, double eps,
                          double tol = kDefaultTolerance);

// Joins each DLC link to the next along the curve and the last one to the
// final vertex; zero-length pieces are dropped. Throws InputError for a
// malformed chain.
Simplification Assemble(const Polyline& curve, const Dlc& dlc, double eps);

// Merges consecutive links on one supporting line when the merged link stays
// within epsilon.
Simplification MergeCollinear(const Polyline& curve, const Simplification& simp,
                              double tol = kDefaultTolerance);

// Curve-restricted simplification with at most twice the optimal number of
// links.
Simplification Simplify2Approx(const Polyline& curve, double eps,
                               double tol = kDefaultTolerance);

}  // namespace curvemin
