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

#include "curvemin/geometry.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace curvemin {
namespace {

using testing::RandomPoint;
using testing::Rng;
using testing::Uniform;

const Segment kUnitAxis{Point(0, 0), Point(2, 0)};

void ExpectPointNear(const Point& actual, const Point& expected,
                     double tol = 1e-12) {
  EXPECT_NEAR(actual.x(), expected.x(), tol);
  EXPECT_NEAR(actual.y(), expected.y(), tol);
}

Line MakeLine(double a, double b, double c) {
  return *Line::FromCoefficients(a, b, c);
}

TEST(DistPointSegment, Examples) {
  EXPECT_DOUBLE_EQ(DistPointSegment(Point(1, 1), kUnitAxis), 1.0);
  EXPECT_DOUBLE_EQ(DistPointSegment(Point(3, 0), kUnitAxis), 1.0);
  EXPECT_DOUBLE_EQ(DistPointSegment(Point(0, 0), Segment{Point(0, 0), Point(1, 0)}),
                   0.0);
}

TEST(DistPointSegment, DegenerateSegmentIsPointDistance) {
  const Segment s{Point(1, 2), Point(1, 2)};
  EXPECT_DOUBLE_EQ(DistPointSegment(Point(4, 6), s), 5.0);
}

TEST(DistPointSegment, BoundedByEndpointsAndLine) {
  Rng rng(11);
  for (int it = 0; it < 2000; ++it) {
    const Point p = RandomPoint(rng);
    const Segment s{RandomPoint(rng), RandomPoint(rng)};
    const double d = DistPointSegment(p, s);
    EXPECT_LE(d, std::max((p - s.a).norm(), (p - s.b).norm()) + 1e-12);
    const auto line = Line::Through(s.a, s.b);
    ASSERT_TRUE(line);
    EXPECT_GE(d, line->Distance(p) - 1e-12);
  }
}

TEST(DistPointSegment, ConvexAlongAnEdge) {
  Rng rng(12);
  for (int it = 0; it < 1000; ++it) {
    const Segment e{RandomPoint(rng), RandomPoint(rng)};
    const Segment s{RandomPoint(rng), RandomPoint(rng)};
    const double ends =
        std::max(DistPointSegment(e.a, s), DistPointSegment(e.b, s));
    for (int k = 1; k <= 100; ++k) {
      const double t = k / 101.0;
      ASSERT_LE(DistPointSegment(e.at(t), s), ends + 1e-9);
    }
  }
}

TEST(SegmentIntersectsDisk, Examples) {
  EXPECT_TRUE(SegmentIntersectsDisk(kUnitAxis, Disk{Point(1, 1), 1.0}));
  EXPECT_FALSE(SegmentIntersectsDisk(kUnitAxis, Disk{Point(1, 1), 0.5}));
  EXPECT_FALSE(SegmentIntersectsDisk(kUnitAxis, Disk{Point(5, 5), 1.0}));
}

TEST(SegmentIntersectsDisk, AgreesWithPointDistance) {
  Rng rng(13);
  for (int it = 0; it < 5000; ++it) {
    const Segment s{RandomPoint(rng), RandomPoint(rng)};
    const Disk d{RandomPoint(rng), Uniform(rng, 0.0, 2.0)};
    const double dist = DistPointSegment(d.center, s);
    if (std::abs(dist - d.radius) < 1e-7) continue;
    EXPECT_EQ(SegmentIntersectsDisk(s, d), dist <= d.radius);
  }
}

TEST(Line, CanonicalNormalization) {
  const Line l = MakeLine(-3, -4, 10);
  EXPECT_DOUBLE_EQ(l.a(), 0.6);
  EXPECT_DOUBLE_EQ(l.b(), 0.8);
  EXPECT_DOUBLE_EQ(l.c(), -2.0);
  // Horizontal line: A = 0, so B carries the sign.
  const Line h = MakeLine(0, -2, 4);
  EXPECT_EQ(h.a(), 0.0);
  EXPECT_DOUBLE_EQ(h.b(), 1.0);
  EXPECT_DOUBLE_EQ(h.c(), -2.0);
  EXPECT_FALSE(Line::FromCoefficients(0, 0, 1));
}

TEST(Line, SameLineFromDifferentPoints) {
  Rng rng(14);
  for (int it = 0; it < 500; ++it) {
    const Point p = RandomPoint(rng);
    const Point q = RandomPoint(rng);
    const auto l1 = Line::Through(p, q);
    const auto l2 = Line::Through(q, p);
    const auto l3 = Line::Through(p + 0.3 * (q - p), p + 2.0 * (q - p));
    ASSERT_TRUE(l1 && l2 && l3);
    EXPECT_TRUE(l1->ApproxEqual(*l2, 1e-12));
    EXPECT_TRUE(l1->ApproxEqual(*l3, 1e-9));
    EXPECT_NEAR(l1->a() * l1->a() + l1->b() * l1->b(), 1.0, 1e-12);
  }
}

TEST(LineSegmentIntersection, Examples) {
  ExpectPointNear(*LineSegmentIntersection(MakeLine(1, 0, -1), kUnitAxis),
                  Point(1, 0));
  EXPECT_FALSE(LineSegmentIntersection(MakeLine(0, 1, -5), kUnitAxis));
  // Collinear: s.a by convention.
  ExpectPointNear(*LineSegmentIntersection(MakeLine(0, 1, 0), kUnitAxis),
                  Point(0, 0));
}

TEST(LineSegmentIntersection, TouchingAnEndpoint) {
  ExpectPointNear(*LineSegmentIntersection(MakeLine(1, 0, -2), kUnitAxis),
                  Point(2, 0));
  EXPECT_FALSE(LineSegmentIntersection(MakeLine(1, 0, -2.5), kUnitAxis));
}

TEST(TangentLinesPointCircle, Examples) {
  const auto boundary =
      TangentLinesPointCircle(Point(0, 0), Disk{Point(2, 0), 2.0});
  ASSERT_EQ(boundary.size(), 1u);
  EXPECT_TRUE(boundary[0].ApproxEqual(MakeLine(1, 0, 0), 1e-12));

  EXPECT_TRUE(
      TangentLinesPointCircle(Point(1, 0), Disk{Point(0, 0), 2.0}).empty());

  const Disk d{Point(0, 2), std::sqrt(2.0)};
  const auto two = TangentLinesPointCircle(Point(0, 0), d);
  ASSERT_EQ(two.size(), 2u);
  for (const Line& l : two) {
    EXPECT_NEAR(std::abs(l.a() * 0 + l.b() * 2 + l.c()), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(l.Distance(Point(0, 0)), 0.0, 1e-12);
  }
  // y = x and y = -x.
  EXPECT_TRUE(two[0].ApproxEqual(MakeLine(1, 1, 0), 1e-12) ||
              two[1].ApproxEqual(MakeLine(1, 1, 0), 1e-12));
  EXPECT_TRUE(two[0].ApproxEqual(MakeLine(1, -1, 0), 1e-12) ||
              two[1].ApproxEqual(MakeLine(1, -1, 0), 1e-12));
}

TEST(TangentLinesPointCircle, RandomTangency) {
  Rng rng(15);
  for (int it = 0; it < 2000; ++it) {
    const Point p = RandomPoint(rng);
    const Disk d{RandomPoint(rng), Uniform(rng, 0.05, 1.5)};
    const double dist = (p - d.center).norm();
    const auto lines = TangentLinesPointCircle(p, d);
    if (dist < d.radius - 1e-6) EXPECT_TRUE(lines.empty());
    if (dist > d.radius + 1e-6) EXPECT_EQ(lines.size(), 2u);
    for (const Line& l : lines) {
      EXPECT_LE(std::abs(l.Distance(d.center) - d.radius), 1e-9);
      EXPECT_LE(l.Distance(p), 1e-9);
    }
  }
}

TEST(BitangentLines, SeparatedUnitDisks) {
  const Disk d1{Point(0, 0), 1.0};
  const Disk d2{Point(4, 0), 1.0};
  const auto lines = BitangentLines(d1, d2);
  ASSERT_EQ(lines.size(), 4u);
  int through_midpoint = 0;
  for (const Line& l : lines) {
    EXPECT_NEAR(l.Distance(d1.center), 1.0, 1e-12);
    EXPECT_NEAR(l.Distance(d2.center), 1.0, 1e-12);
    if (l.Distance(Point(2, 0)) < 1e-12) ++through_midpoint;
  }
  EXPECT_EQ(through_midpoint, 2);
  EXPECT_TRUE(lines[0].ApproxEqual(MakeLine(0, 1, -1), 1e-12) ||
              lines[1].ApproxEqual(MakeLine(0, 1, -1), 1e-12));
}

TEST(BitangentLines, ConcentricIsEmpty) {
  EXPECT_TRUE(
      BitangentLines(Disk{Point(1, 1), 1.0}, Disk{Point(1, 1), 1.0}).empty());
}

TEST(BitangentLines, OverlappingDisksHaveOuterTangentsOnly) {
  const Disk d1{Point(0, 0), 1.0};
  const Disk d2{Point(1, 0), 1.0};
  const auto lines = BitangentLines(d1, d2);
  ASSERT_EQ(lines.size(), 2u);
  for (const Line& l : lines) {
    EXPECT_NEAR(l.Distance(d1.center), 1.0, 1e-12);
    EXPECT_NEAR(l.Distance(d2.center), 1.0, 1e-12);
  }
}

TEST(BitangentLines, ExternallyTouchingDisksShareOneInnerTangent) {
  const auto lines =
      BitangentLines(Disk{Point(0, 0), 1.0}, Disk{Point(2, 0), 1.0});
  EXPECT_EQ(lines.size(), 3u);
}

TEST(BitangentLines, RandomDistances) {
  Rng rng(16);
  for (int it = 0; it < 2000; ++it) {
    const double r = Uniform(rng, 0.05, 1.5);
    const Disk d1{RandomPoint(rng), r};
    const Disk d2{RandomPoint(rng), r};
    const double gap = (d1.center - d2.center).norm();
    const auto lines = BitangentLines(d1, d2);
    if (gap > 2 * r + 1e-6) EXPECT_EQ(lines.size(), 4u);
    if (gap < 2 * r - 1e-6 && gap > 1e-6) EXPECT_EQ(lines.size(), 2u);
    for (const Line& l : lines) {
      EXPECT_LE(std::abs(l.Distance(d1.center) - r), 1e-9);
      EXPECT_LE(std::abs(l.Distance(d2.center) - r), 1e-9);
    }
  }
}

TEST(CircleSegmentIntersections, Examples) {
  const Segment s{Point(-2, 0), Point(2, 0)};
  const auto two = CircleSegmentIntersections(Disk{Point(0, 0), 1.0}, s);
  ASSERT_EQ(two.size(), 2u);
  ExpectPointNear(two[0], Point(-1, 0));
  ExpectPointNear(two[1], Point(1, 0));
  EXPECT_TRUE(CircleSegmentIntersections(Disk{Point(0, 2), 1.0}, s).empty());
  const auto touch = CircleSegmentIntersections(Disk{Point(0, 1), 1.0}, s);
  ASSERT_EQ(touch.size(), 1u);
  ExpectPointNear(touch[0], Point(0, 0));
}

TEST(CircleSegmentIntersections, OnCircleAndSegment) {
  Rng rng(17);
  for (int it = 0; it < 2000; ++it) {
    const Segment s{RandomPoint(rng), RandomPoint(rng)};
    const Disk d{RandomPoint(rng), Uniform(rng, 0.1, 2.0)};
    const auto params = CircleSegmentParameters(d, s);
    for (std::size_t k = 0; k < params.size(); ++k) {
      EXPECT_GE(params[k], 0.0);
      EXPECT_LE(params[k], 1.0);
      if (k > 0) EXPECT_LE(params[k - 1], params[k]);
      EXPECT_LE(std::abs((s.at(params[k]) - d.center).norm() - d.radius), 1e-9);
    }
  }
}

TEST(GeometryKernel, InstantiatesForLongDouble) {
  using P = Point2<long double>;
  const Segment2<long double> s{P(0, 0), P(2, 0)};
  EXPECT_EQ(DistPointSegment(P(1, 1), s), 1.0L);
  EXPECT_EQ(BitangentLines(Disk2<long double>{P(0, 0), 1},
                           Disk2<long double>{P(4, 0), 1})
                .size(),
            4u);
}

}  // namespace
}  // namespace curvemin
