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

// Planar geometry kernel: points, segments, lines and disks, with the
// distance, intersection and tangency primitives used by the simplifier.
//
// Every containment or tangency comparison takes an absolute tolerance
// (kDefaultTolerance unless overridden). Disks and segments are closed.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <tuple>
#include <vector>

#include <Eigen/Core>

namespace curvemin {

inline constexpr double kDefaultTolerance = 1e-9;

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
struct Segment2 {
  Point2<Scalar> a;
  Point2<Scalar> b;

  Point2<Scalar> direction() const { return b - a; }
  Point2<Scalar> at(Scalar t) const { return a + t * (b - a); }
  Scalar length() const { return (b - a).norm(); }
};

template <typename Scalar>
struct Disk2 {
  Point2<Scalar> center;
  Scalar radius;
};

// Line A*x + B*y + C = 0 with A^2 + B^2 = 1 and the first nonzero of (A, B)
// positive, so the same geometric line always yields the same triple.
template <typename Scalar>
class Line2 {
 public:
  // Normalizes an arbitrary (A, B, C). Returns nullopt if (A, B) vanishes.
  static std::optional<Line2> FromCoefficients(Scalar a, Scalar b, Scalar c) {
    using std::abs;
    using std::hypot;
    const Scalar norm = hypot(a, b);
    if (!(norm > Scalar(0))) return std::nullopt;
    a /= norm;
    b /= norm;
    c /= norm;
    // Near-axis normals snap so that tiny sign noise does not flip the triple.
    constexpr Scalar kAxisSnap = Scalar(1e-15);
    if (abs(a) < kAxisSnap) a = Scalar(0);
    if (abs(b) < kAxisSnap) b = Scalar(0);
    if (a < Scalar(0) || (a == Scalar(0) && b < Scalar(0))) {
      a = -a;
      b = -b;
      c = -c;
    }
    return Line2(a, b, c);
  }

  static std::optional<Line2> FromNormal(const Point2<Scalar>& normal,
                                         Scalar offset) {
    return FromCoefficients(normal.x(), normal.y(), offset);
  }

  static std::optional<Line2> Through(const Point2<Scalar>& p,
                                      const Point2<Scalar>& q) {
    const Point2<Scalar> d = q - p;
    const Point2<Scalar> n(-d.y(), d.x());
    return FromCoefficients(n.x(), n.y(), -n.dot(p));
  }

  Scalar a() const { return a_; }
  Scalar b() const { return b_; }
  Scalar c() const { return c_; }
  Point2<Scalar> normal() const { return {a_, b_}; }
  Point2<Scalar> direction() const { return {-b_, a_}; }

  Scalar SignedDistance(const Point2<Scalar>& p) const {
    return a_ * p.x() + b_ * p.y() + c_;
  }
  Scalar Distance(const Point2<Scalar>& p) const {
    using std::abs;
    return abs(SignedDistance(p));
  }

  auto Tie() const { return std::tie(a_, b_, c_); }
  friend bool operator<(const Line2& l, const Line2& r) {
    return l.Tie() < r.Tie();
  }
  friend bool operator==(const Line2& l, const Line2& r) {
    return l.Tie() == r.Tie();
  }

  bool ApproxEqual(const Line2& other, Scalar tol) const {
    using std::abs;
    return abs(a_ - other.a_) <= tol && abs(b_ - other.b_) <= tol &&
           abs(c_ - other.c_) <= tol;
  }

 private:
  Line2(Scalar a, Scalar b, Scalar c) : a_(a), b_(b), c_(c) {}

  Scalar a_;
  Scalar b_;
  Scalar c_;
};

using Point = Point2<double>;
using Segment = Segment2<double>;
using Disk = Disk2<double>;
using Line = Line2<double>;

template <typename Scalar>
Scalar Cross(const Point2<Scalar>& u, const Point2<Scalar>& v) {
  return u.x() * v.y() - u.y() * v.x();
}

// Parameter of the point of s closest to p, clamped to [0, 1].
template <typename Scalar>
Scalar ClosestParameter(const Point2<Scalar>& p, const Segment2<Scalar>& s) {
  const Point2<Scalar> d = s.direction();
  const Scalar len2 = d.squaredNorm();
  if (len2 == Scalar(0)) return Scalar(0);
  return std::clamp((p - s.a).dot(d) / len2, Scalar(0), Scalar(1));
}

template <typename Scalar>
Scalar DistPointSegment(const Point2<Scalar>& p, const Segment2<Scalar>& s) {
  return (p - s.at(ClosestParameter(p, s))).norm();
}

// Closed-disk test. Evaluated from the supporting line rather than through
// DistPointSegment so the two routes stay independent.
template <typename Scalar>
bool SegmentIntersectsDisk(const Segment2<Scalar>& s, const Disk2<Scalar>& d,
                           Scalar tol = Scalar(kDefaultTolerance)) {
  const Scalar reach = d.radius + tol;
  if ((s.a - d.center).norm() <= reach || (s.b - d.center).norm() <= reach)
    return true;
  const Point2<Scalar> dir = s.direction();
  const Scalar len = dir.norm();
  if (len == Scalar(0)) return false;
  const Point2<Scalar> rel = d.center - s.a;
  const Scalar along = rel.dot(dir);
  if (along <= Scalar(0) || along >= len * len) return false;
  using std::abs;
  return abs(Cross(dir, rel)) / len <= reach;
}

// Parameter along s at which line crosses it. Conventions: a segment lying
// on the line yields 0 (s.a); touching at an endpoint yields that endpoint,
// preferring s.a.
template <typename Scalar>
std::optional<Scalar> LineSegmentParameter(
    const Line2<Scalar>& line, const Segment2<Scalar>& s,
    Scalar tol = Scalar(kDefaultTolerance)) {
  using std::abs;
  const Scalar da = line.SignedDistance(s.a);
  const Scalar db = line.SignedDistance(s.b);
  if (abs(da) <= tol) return Scalar(0);
  if (abs(db) <= tol) return Scalar(1);
  if ((da > Scalar(0)) == (db > Scalar(0))) return std::nullopt;
  return std::clamp(da / (da - db), Scalar(0), Scalar(1));
}

template <typename Scalar>
std::optional<Point2<Scalar>> LineSegmentIntersection(
    const Line2<Scalar>& line, const Segment2<Scalar>& s,
    Scalar tol = Scalar(kDefaultTolerance)) {
  const auto t = LineSegmentParameter(line, s, tol);
  if (!t) return std::nullopt;
  return s.at(*t);
}

// Lines through p tangent to the circle bounding d: none when p is strictly
// inside, one when p is on the boundary, two otherwise.
template <typename Scalar>
std::vector<Line2<Scalar>> TangentLinesPointCircle(
    const Point2<Scalar>& p, const Disk2<Scalar>& d,
    Scalar tol = Scalar(kDefaultTolerance)) {
  std::vector<Line2<Scalar>> lines;
  const Point2<Scalar> rel = d.center - p;
  const Scalar dist = rel.norm();
  if (dist < d.radius - tol || dist == Scalar(0)) return lines;
  const Point2<Scalar> u = rel / dist;
  if (dist <= d.radius + tol) {
    if (auto l = Line2<Scalar>::FromNormal(u, -u.dot(p))) lines.push_back(*l);
    return lines;
  }
  using std::sqrt;
  const Scalar cosine = d.radius / dist;
  const Scalar sine = sqrt(std::max(Scalar(0), Scalar(1) - cosine * cosine));
  const Point2<Scalar> perp(-u.y(), u.x());
  for (const Scalar sign : {Scalar(1), Scalar(-1)}) {
    const Point2<Scalar> n = cosine * u + sign * sine * perp;
    if (auto l = Line2<Scalar>::FromNormal(n, -n.dot(p))) lines.push_back(*l);
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

// Common tangents of two circles, outer first then inner. Concentric disks
// yield an empty list (the equal-radius family is infinite).
template <typename Scalar>
std::vector<Line2<Scalar>> BitangentLines(
    const Disk2<Scalar>& d1, const Disk2<Scalar>& d2,
    Scalar tol = Scalar(kDefaultTolerance)) {
  std::vector<Line2<Scalar>> lines;
  const Point2<Scalar> rel = d2.center - d1.center;
  const Scalar dist = rel.norm();
  if (dist <= tol) return lines;
  const Point2<Scalar> u = rel / dist;
  const Point2<Scalar> perp(-u.y(), u.x());
  using std::abs;
  using std::sqrt;
  // Normal n with n.c1 + C = r1 and n.c2 + C = +-r2, so n.rel = +-r2 - r1.
  for (const Scalar side : {Scalar(1), Scalar(-1)}) {
    const Scalar proj = side * d2.radius - d1.radius;
    if (abs(proj) > dist + tol) continue;
    const Scalar cosine = std::clamp(proj / dist, Scalar(-1), Scalar(1));
    const Scalar sine = sqrt(std::max(Scalar(0), Scalar(1) - cosine * cosine));
    const bool single = abs(abs(proj) - dist) <= tol;
    for (const Scalar sign : {Scalar(1), Scalar(-1)}) {
      const Point2<Scalar> n = cosine * u + sign * sine * perp;
      if (auto l = Line2<Scalar>::FromNormal(n, d1.radius - n.dot(d1.center)))
        lines.push_back(*l);
      if (single) break;
    }
  }
  // Internally tangent circles produce the same line from both branches.
  std::vector<Line2<Scalar>> unique;
  for (const auto& l : lines) {
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](auto& u) {
      return u.ApproxEqual(l, tol);
    });
    if (!seen) unique.push_back(l);
  }
  return unique;
}

// Parameters in [0, 1] at which s meets the circle bounding d, ascending.
template <typename Scalar>
std::vector<Scalar> CircleSegmentParameters(
    const Disk2<Scalar>& d, const Segment2<Scalar>& s,
    Scalar tol = Scalar(kDefaultTolerance)) {
  std::vector<Scalar> params;
  const Point2<Scalar> dir = s.direction();
  const Scalar len = dir.norm();
  using std::abs;
  using std::sqrt;
  if (len == Scalar(0)) {
    if (abs((s.a - d.center).norm() - d.radius) <= tol)
      params.push_back(Scalar(0));
    return params;
  }
  const Scalar foot = (d.center - s.a).dot(dir) / (len * len);
  const Scalar height = abs(Cross(dir, Point2<Scalar>(d.center - s.a))) / len;
  if (height > d.radius + tol) return params;
  const Scalar slack = tol / len;
  auto keep = [&](Scalar t) {
    if (t >= -slack && t <= Scalar(1) + slack)
      params.push_back(std::clamp(t, Scalar(0), Scalar(1)));
  };
  if (abs(height - d.radius) <= tol) {
    keep(foot);
    return params;
  }
  const Scalar half =
      sqrt(std::max(Scalar(0), d.radius * d.radius - height * height)) / len;
  keep(foot - half);
  keep(foot + half);
  return params;
}

template <typename Scalar>
std::vector<Point2<Scalar>> CircleSegmentIntersections(
    const Disk2<Scalar>& d, const Segment2<Scalar>& s,
    Scalar tol = Scalar(kDefaultTolerance)) {
  std::vector<Point2<Scalar>> points;
  for (const Scalar t : CircleSegmentParameters(d, s, tol))
    points.push_back(s.at(t));
  return points;
}

}  // namespace curvemin
