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

#include "curvemin/dlc.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

#include "curvemin/candidates.hpp"

namespace curvemin {

namespace {

// Prefers the earlier end, then the later start.
bool Improves(const Link& candidate, const std::optional<DpTables::Cell>& cell) {
  if (!cell) return true;
  if (candidate.end < cell->link.end) return true;
  return candidate.end == cell->link.end && cell->link.start < candidate.start;
}

void CheckStored(const Polyline& curve, const Link& link, double eps,
                 double tol) {
  if (DirectedHausdorffToSegment(curve, link.start, link.end) > eps + tol)
    throw std::logic_error(fmt::format(
        "dp stored an invalid link ({}, {}) -> ({}, {})", link.start.edge,
        link.start.t, link.end.edge, link.end.t));
}

class LinkCache {
 public:
  LinkCache(const Polyline& curve, double eps, double tol)
      : curve_(curve), eps_(eps), tol_(tol) {}

  const std::optional<Link>& Get(const CurvePoint& start_lb,
                                 std::size_t end_edge) {
    const auto key = std::make_tuple(start_lb.edge, start_lb.t, end_edge);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_
               .emplace(key, MinEndpointLink(curve_, start_lb, end_edge, eps_,
                                             tol_))
               .first;
    return it->second;
  }

 private:
  const Polyline& curve_;
  double eps_;
  double tol_;
  std::map<std::tuple<std::size_t, double, std::size_t>, std::optional<Link>>
      cache_;
};

}  // namespace

bool IsValidDlc(const Polyline& curve, const Dlc& dlc, double eps,
                double tol) {
  if (dlc.links.empty()) return false;
  if (Canonicalize(dlc.links.front().start, curve) != StartOf(curve))
    return false;
  const CurvePoint last_end = Canonicalize(dlc.links.back().end, curve);
  if (last_end.edge + 1 != curve.edge_count()) return false;
  for (std::size_t r = 0; r < dlc.links.size(); ++r) {
    const Link& link = dlc.links[r];
    if (CompareAlongCurve(link.start, link.end, curve) == Order::kAfter)
      return false;
    if (!IsValidLink(curve, link.start, link.end, eps, tol)) return false;
    if (r + 1 < dlc.links.size() &&
        !OnSameEdge(link.end, dlc.links[r + 1].start, curve))
      return false;
  }
  return true;
}

DpTables FillTables(const Polyline& curve, double eps,
                    const DpOptions& options) {
  if (!(eps > 0.0)) throw InputError("epsilon must be positive");
  const std::size_t edges = curve.edge_count();
  const std::size_t last = edges - 1;
  // F[last][d] is defined once d reaches max(1, edges - 1).
  const std::size_t cap = std::max<std::size_t>(1, edges - 1);
  const std::size_t target = options.rows ? options.rows : cap;
  const double tol = options.tol;

  DpTables tables(edges, 1);
  const CurvePoint origin = StartOf(curve);
  for (std::size_t e = 0; e < edges; ++e) {
    if (auto link = MinEndpointLinkFixedStart(curve, origin, e, eps, tol)) {
      CheckStored(curve, *link, eps, tol);
      tables.at(e, 1) = DpTables::Cell{link->end, *link, std::nullopt};
    }
  }

  LinkCache cache(curve, eps, tol);
  for (std::size_t d = 2; d <= target; ++d) {
    if (!options.rows && tables.at(last, d - 1)) break;
    tables.AddRow();
    for (std::size_t e = 0; e < edges; ++e) {
      std::optional<DpTables::Cell> best;
      for (std::size_t prev = 0; prev <= e; ++prev) {
        const auto& from = tables.at(prev, d - 1);
        if (!from) continue;
        std::optional<Link> link;
        if (prev == e)
          link = Link{from->first_end, from->first_end, eps};
        else
          link = cache.Get(from->first_end, e);
        if (link && Improves(*link, best))
          best = DpTables::Cell{link->end, *link, prev};
      }
      if (best) {
        CheckStored(curve, best->link, eps, tol);
        tables.at(e, d) = best;
      }
    }
  }
  return tables;
}

Dlc Reconstruct(const DpTables& tables, std::size_t edge, std::size_t links) {
  Dlc dlc;
  std::optional<std::size_t> current = edge;
  for (std::size_t d = links; d >= 1 && current; --d) {
    const auto& cell = tables.at(*current, d);
    if (!cell) throw std::logic_error("dp predecessor chain is broken");
    dlc.links.push_back(cell->link);
    current = cell->predecessor;
  }
  std::reverse(dlc.links.begin(), dlc.links.end());
  return dlc;
}

std::optional<Dlc> MinDlc(const Polyline& curve, double eps, double tol) {
  const DpTables tables = FillTables(curve, eps, {tol, 0});
  const std::size_t last = curve.edge_count() - 1;
  for (std::size_t d = 1; d <= tables.rows(); ++d) {
    if (tables.at(last, d)) return Reconstruct(tables, last, d);
  }
  return std::nullopt;
}

Simplification Assemble(const Polyline& curve, const Dlc& dlc, double eps) {
  if (dlc.links.empty()) throw InputError("empty link chain");
  Simplification simp;
  simp.epsilon = eps;
  simp.dlc_size = dlc.size();
  auto push = [&](const CurvePoint& p) {
    const CurvePoint cp = Canonicalize(p, curve);
    if (!simp.chain.empty()) {
      if (cp < simp.chain.back())
        throw InputError("link chain is out of curve order");
      if (cp == simp.chain.back()) return;
    }
    simp.chain.push_back(cp);
  };
  if (Canonicalize(dlc.links.front().start, curve) != StartOf(curve))
    throw InputError("link chain does not start at the first vertex");
  for (std::size_t r = 0; r < dlc.links.size(); ++r) {
    if (r > 0 && !OnSameEdge(dlc.links[r - 1].end, dlc.links[r].start, curve))
      throw InputError(
          fmt::format("links {} and {} are not joined on one edge", r - 1, r));
    push(dlc.links[r].start);
    push(dlc.links[r].end);
  }
  if (Canonicalize(dlc.links.back().end, curve).edge + 1 != curve.edge_count())
    throw InputError("link chain does not end on the last edge");
  push(EndOf(curve));
  return simp;
}

Simplification MergeCollinear(const Polyline& curve, const Simplification& simp,
                              double tol) {
  if (simp.chain.size() < 3) return simp;
  Simplification merged = simp;
  merged.chain.clear();
  merged.chain.push_back(simp.chain.front());
  for (std::size_t r = 1; r < simp.chain.size(); ++r) {
    const CurvePoint& next = simp.chain[r];
    if (merged.chain.size() >= 2) {
      const CurvePoint& a = merged.chain[merged.chain.size() - 2];
      const CurvePoint& b = merged.chain.back();
      const Point pa = Embed(a, curve);
      const Point pb = Embed(b, curve);
      const Point pc = Embed(next, curve);
      const auto first = Line::Through(pa, pb);
      const auto second = Line::Through(pb, pc);
      if (first && second && first->ApproxEqual(*second, tol) &&
          (pb - pa).dot(pc - pb) > 0.0 &&
          DirectedHausdorffToSegment(curve, a, next) <= simp.epsilon + tol) {
        merged.chain.back() = next;
        continue;
      }
    }
    merged.chain.push_back(next);
  }
  return merged;
}

Simplification Simplify2Approx(const Polyline& curve, double eps, double tol) {
  const auto dlc = MinDlc(curve, eps, tol);
  if (!dlc) throw std::logic_error("no link chain found");
  return MergeCollinear(curve, Assemble(curve, *dlc, eps), tol);
}

}  // namespace curvemin
