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

#include <gtest/gtest.h>

#include "curvemin/baselines.hpp"
#include "curvemin/oracle.hpp"
#include "test_support.hpp"

namespace curvemin {
namespace {

using testing::MeanEdgeLength;
using testing::RandomCurve;
using testing::Rng;
using testing::Uniform;
using testing::UniformIndex;

const Polyline kStraight({Point(0, 0), Point(1, 0), Point(2, 0), Point(3, 0)});
const Polyline kZigzag({Point(0, 0), Point(1, 1), Point(2, 0), Point(3, 1),
                        Point(4, 0)});
const Polyline kLine5({Point(0, 0), Point(1, 0), Point(2, 0), Point(3, 0),
                       Point(4, 0)});

std::vector<CurvePoint> Chain(std::initializer_list<CurvePoint> points) {
  return points;
}

TEST(MinDlc, StraightCurveIsOneLink) {
  const auto dlc = MinDlc(kStraight, 0.1);
  ASSERT_TRUE(dlc);
  ASSERT_EQ(dlc->size(), 1u);
  EXPECT_EQ(dlc->links[0].start, StartOf(kStraight));
  EXPECT_EQ(dlc->links[0].end, (CurvePoint{2, 0.0}));
  EXPECT_EQ(OracleMinDlc(kStraight, 0.1).size(), 1u);
}

TEST(MinDlc, ZigzagAtUnitEpsilon) {
  const auto dlc = MinDlc(kZigzag, 1.0);
  ASSERT_TRUE(dlc);
  ASSERT_EQ(dlc->size(), 1u);
  EXPECT_EQ(Embed(dlc->links[0].start, kZigzag), Point(0, 0));
  EXPECT_EQ(Embed(dlc->links[0].end, kZigzag), Point(3, 1));
}

TEST(MinDlc, ZigzagMatchesOracleWhenTight) {
  const auto dlc = MinDlc(kZigzag, 0.4);
  ASSERT_TRUE(dlc);
  EXPECT_TRUE(IsValidDlc(kZigzag, *dlc, 0.4));
  EXPECT_EQ(dlc->size(), 2u);
  EXPECT_EQ(OracleMinDlc(kZigzag, 0.4).size(), dlc->size());
}

TEST(MinDlc, RejectsNonPositiveEpsilon) {
  EXPECT_THROW(MinDlc(kZigzag, 0.0), InputError);
  EXPECT_THROW(MinDlc(kZigzag, -1.0), InputError);
}

TEST(FillTables, CellsLieOnTheirEdgeAndRowsAreMonotone) {
  Rng rng(51);
  for (int it = 0; it < 40; ++it) {
    const Polyline curve = RandomCurve(rng, UniformIndex(rng, 2, 9));
    const double eps = Uniform(rng, 0.1, 2.0) * MeanEdgeLength(curve);
    const DpTables tables =
        FillTables(curve, eps, {kDefaultTolerance, curve.edge_count()});
    for (std::size_t e = 0; e < tables.edge_count(); ++e) {
      for (std::size_t d = 1; d <= tables.rows(); ++d) {
        const auto& cell = tables.at(e, d);
        if (!cell) continue;
        EXPECT_TRUE(OnSameEdge({e, 0.0}, cell->first_end, curve));
        EXPECT_EQ(cell->first_end, cell->link.end);
        EXPECT_TRUE(IsValidLink(curve, cell->link));
        EXPECT_EQ(cell->predecessor.has_value(), d > 1);
        if (d == 1) EXPECT_EQ(cell->link.start, StartOf(curve));
        if (d < tables.rows()) {
          const auto& below = tables.at(e, d + 1);
          ASSERT_TRUE(below);
          EXPECT_LE(below->first_end, cell->first_end);
        }
        const Dlc prefix = Reconstruct(tables, e, d);
        EXPECT_EQ(prefix.size(), d);
        EXPECT_EQ(prefix.links.back().end, cell->first_end);
      }
    }
  }
}

TEST(FillTables, StopsAtFirstRowReachingLastEdge) {
  const DpTables tables = FillTables(kZigzag, 1.0);
  EXPECT_EQ(tables.rows(), 1u);
  EXPECT_TRUE(tables.at(3, 1));
}

TEST(Assemble, OneLinkEndingAtLastVertex) {
  const Dlc dlc{{Link{StartOf(kStraight), EndOf(kStraight), 0.1}}};
  const auto simp = Assemble(kStraight, dlc, 0.1);
  EXPECT_EQ(simp.link_count(), 1u);
  EXPECT_EQ(simp.dlc_size, 1u);
}

TEST(Assemble, OneLinkEndingMidLastEdge) {
  const Dlc dlc{{Link{StartOf(kStraight), {2, 0.5}, 0.1}}};
  EXPECT_EQ(Assemble(kStraight, dlc, 0.1).link_count(), 2u);
}

TEST(Assemble, NonzeroGapsDoubleTheCount) {
  const Dlc dlc{{Link{{0, 0.0}, {1, 0.5}, 0.1}, Link{{1, 0.7}, {2, 0.5}, 0.1},
                 Link{{2, 0.7}, {3, 0.5}, 0.1}}};
  ASSERT_TRUE(IsValidDlc(kLine5, dlc, 0.1));
  const auto simp = Assemble(kLine5, dlc, 0.1);
  EXPECT_EQ(simp.link_count(), 2 * dlc.size());
  EXPECT_TRUE(Verify(kLine5, simp).passed);
}

TEST(Assemble, ZeroLengthPiecesAreDropped) {
  const Dlc dlc{{Link{{0, 0.0}, {1, 0.5}, 0.1}, Link{{1, 0.5}, {3, 0.0}, 0.1}}};
  EXPECT_EQ(Assemble(kLine5, dlc, 0.1).link_count(), 3u);
}

TEST(Assemble, RejectsMalformedChains) {
  EXPECT_THROW(Assemble(kLine5, Dlc{}, 0.1), InputError);
  EXPECT_THROW(Assemble(kLine5, Dlc{{Link{{0, 0.5}, {3, 0.5}, 0.1}}}, 0.1),
               InputError);
  EXPECT_THROW(Assemble(kLine5, Dlc{{Link{{0, 0.0}, {2, 0.5}, 0.1}}}, 0.1),
               InputError);
  EXPECT_THROW(Assemble(kLine5,
                        Dlc{{Link{{0, 0.0}, {1, 0.5}, 0.1},
                             Link{{2, 0.5}, {3, 0.5}, 0.1}}},
                        0.1),
               InputError);
}

TEST(MergeCollinear, StraightTwoLinksBecomeOne) {
  Simplification simp{Chain({{0, 0.0}, {1, 0.5}, {2, 1.0}}), 0.1, {}};
  const auto merged = MergeCollinear(kStraight, simp);
  EXPECT_EQ(merged.link_count(), 1u);
  EXPECT_EQ(merged.chain.back(), (CurvePoint{2, 1.0}));
}

TEST(MergeCollinear, ThreeCollinearLinksBecomeOne) {
  Simplification simp{Chain({{0, 0.0}, {1, 0.0}, {2, 0.0}, {3, 1.0}}), 0.1, 2};
  const auto merged = MergeCollinear(kLine5, simp);
  EXPECT_EQ(merged.link_count(), 1u);
  EXPECT_EQ(merged.dlc_size, 2u);
}

TEST(MergeCollinear, NoCollinearPairIsUnchanged) {
  Simplification simp{Chain({{0, 0.0}, {1, 0.0}, {2, 0.0}, {3, 0.0}, {3, 1.0}}),
                      0.1, {}};
  EXPECT_EQ(MergeCollinear(kZigzag, simp).chain, simp.chain);
}

TEST(MergeCollinear, KeepsReversals) {
  // Out and back along the x-axis: collinear but not mergeable.
  const Polyline curve({Point(0, 0), Point(2, 0), Point(1, 0)});
  Simplification simp{Chain({{0, 0.0}, {1, 0.0}, {1, 1.0}}), 0.1, {}};
  EXPECT_EQ(MergeCollinear(curve, simp).link_count(), 2u);
}

TEST(Simplify2Approx, TwoVertexCurve) {
  const Polyline curve({Point(0, 0), Point(1, 2)});
  const auto simp = Simplify2Approx(curve, 0.1);
  EXPECT_EQ(simp.chain, Chain({StartOf(curve), EndOf(curve)}));
  EXPECT_EQ(simp.dlc_size, 1u);
}

TEST(Simplify2Approx, StraightCurveIsOneLink) {
  EXPECT_EQ(Simplify2Approx(kLine5, 0.1).link_count(), 1u);
}

TEST(Simplify2Approx, BoundsAgainstOtherMethods) {
  Rng rng(52);
  for (int it = 0; it < 60; ++it) {
    const Polyline curve = RandomCurve(rng, UniformIndex(rng, 2, 10));
    const double eps = Uniform(rng, 0.1, 2.0) * MeanEdgeLength(curve);
    const auto dlc = MinDlc(curve, eps);
    ASSERT_TRUE(dlc);
    ASSERT_TRUE(IsValidDlc(curve, *dlc, eps));
    const std::size_t k = dlc->size();
    const auto simp = Simplify2Approx(curve, eps);
    EXPECT_TRUE(Verify(curve, simp).passed);
    EXPECT_LE(simp.link_count(), 2 * k);
    EXPECT_GE(simp.link_count(), k);
    EXPECT_LE(k, ImaiIri(curve, eps).link_count());
    EXPECT_LE(k, DouglasPeucker(curve, eps).link_count());
    EXPECT_LE(k, OracleMinDlc(curve, eps).size());
    EXPECT_LE(simp.link_count(),
              2 * OracleMinSimplification(curve, eps).link_count());
  }
}

}  // namespace
}  // namespace curvemin
