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

#include <compare>
#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvemin/geometry.hpp"

namespace curvemin {

// Bad input values (too few vertices, out-of-range addresses, bad config).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unparseable curve or document text.
class FormatError : public InputError {
 public:
  using InputError::InputError;
};

// Unreadable or unwritable files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two curve points given in the wrong order.
class OrderingError : public InputError {
 public:
  using InputError::InputError;
};

// An open polygonal curve with at least two vertices and no two consecutive
// vertices coinciding. Immutable after construction.
class Polyline {
 public:
  // Throws InputError if the invariant does not hold.
  explicit Polyline(std::vector<Point> vertices,
                    double tol = kDefaultTolerance);

  // Drops consecutive vertices within tol of their predecessor first.
  static Polyline Collapsing(const std::vector<Point>& vertices,
                             double tol = kDefaultTolerance);

  std::size_t size() const { return vertices_.size(); }
  std::size_t edge_count() const { return vertices_.size() - 1; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t k) const { return vertices_[k]; }
  const Point& front() const { return vertices_.front(); }
  const Point& back() const { return vertices_.back(); }
  Segment edge(std::size_t e) const { return {vertices_[e], vertices_[e + 1]}; }

  // Arc length from the first vertex to the start of edge e.
  double ArcLengthTo(std::size_t e) const { return cumulative_[e]; }
  double Length() const { return cumulative_.back(); }

  friend bool operator==(const Polyline& l, const Polyline& r) {
    return l.vertices_ == r.vertices_;
  }

 private:
  std::vector<Point> vertices_;
  std::vector<double> cumulative_;
};

// A point on a polyline addressed as (edge index, parameter along the edge).
// Canonical form has t < 1 except on the last edge: a shared vertex belongs
// to the later edge with t = 0.
struct CurvePoint {
  std::size_t edge = 0;
  double t = 0.0;

  // Lexicographic (edge, t); this is curve order for canonical points.
  friend std::partial_ordering operator<=>(const CurvePoint& l,
                                           const CurvePoint& r) {
    if (auto c = l.edge <=> r.edge; c != 0) return c;
    return l.t <=> r.t;
  }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

enum class Order { kBefore, kEqual, kAfter };

CurvePoint StartOf(const Polyline& curve);
CurvePoint EndOf(const Polyline& curve);
CurvePoint VertexPoint(const Polyline& curve, std::size_t k);

// Throws InputError for an invalid edge index or t outside [0, 1].
CurvePoint Canonicalize(const CurvePoint& cp, const Polyline& curve);
bool IsCanonical(const CurvePoint& cp, const Polyline& curve);

Point Embed(const CurvePoint& cp, const Polyline& curve);
double ArcLength(const CurvePoint& cp, const Polyline& curve);

// Compares canonical forms; exact, no tolerance.
Order CompareAlongCurve(const CurvePoint& x, const CurvePoint& y,
                        const Polyline& curve);

// True when both points lie on one closed edge (a vertex belongs to both of
// its incident edges) and x does not come after y.
bool OnSameEdge(const CurvePoint& x, const CurvePoint& y,
                const Polyline& curve);

// Vertex indices k with i < k <= j, where x is on edge i and y on edge j:
// the vertices whose neighbourhoods a link from x to y has to meet.
std::vector<std::size_t> InteriorVertices(const Polyline& curve,
                                          const CurvePoint& x,
                                          const CurvePoint& y);

enum class CurveFormat { kCsv, kGeoJson };

// Picks the format from a file extension (.csv, .geojson, .json).
CurveFormat FormatFromPath(const std::string& path);

Polyline LoadCurve(std::istream& in, CurveFormat format,
                   double tol = kDefaultTolerance);
Polyline LoadCurveFile(const std::string& path,
                       double tol = kDefaultTolerance);
void SaveCurve(std::ostream& out, const Polyline& curve, CurveFormat format);

}  // namespace curvemin
