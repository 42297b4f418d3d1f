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


#include "curvemin/document.hpp"

#include <string>

#include <gtest/gtest.h>

#include "curvemin/svg.hpp"
#include "test_support.hpp"

namespace curvemin {
namespace {

const Polyline kZigzag({Point(0, 0), Point(1, 1), Point(2, 0), Point(3, 1),
                        Point(4, 0)});

std::size_t Count(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1))
    ++count;
  return count;
}

TEST(SimplificationDocument, KeysAndRoundTrip) {
  const Simplification simp{{{0, 0.0}, {1, 0.25}, {3, 1.0}}, 0.7, 2};
  const auto report = Verify(kZigzag, simp);
  const Json doc = SimplificationToJson(kZigzag, simp, "dlc2approx", report);
  for (const char* key : {"algorithm", "epsilon", "chain", "link_count",
                          "dlc_size", "verified", "max_distance"})
    EXPECT_TRUE(doc.contains(key)) << key;
  EXPECT_EQ(doc["link_count"], 2);
  EXPECT_EQ(doc["chain"][1]["x"], 1.25);
  EXPECT_EQ(doc["chain"][1]["y"], 0.75);

  const Simplification back = SimplificationFromJson(Json::parse(Dump(doc)));
  EXPECT_EQ(back.chain, simp.chain);
  EXPECT_EQ(back.epsilon, simp.epsilon);
  EXPECT_EQ(back.dlc_size, simp.dlc_size);
}

TEST(SimplificationDocument, NullDlcSize) {
  const Simplification simp{{{0, 0.0}, {3, 1.0}}, 2.0, {}};
  const Json doc =
      SimplificationToJson(kZigzag, simp, "imai-iri", Verify(kZigzag, simp));
  EXPECT_TRUE(doc["dlc_size"].is_null());
  EXPECT_FALSE(SimplificationFromJson(doc).dlc_size);
}

TEST(SimplificationDocument, MalformedInput) {
  EXPECT_THROW(SimplificationFromJson(Json::parse(R"({"chain":[]})")),
               FormatError);
  EXPECT_THROW(SimplificationFromJson(
                   Json::parse(R"({"epsilon":1,"chain":[{"edge":"a"}]})")),
               FormatError);
}

TEST(ReportDocument, Keys) {
  const auto report = VerifySimplification(
      kZigzag, {StartOf(kZigzag), EndOf(kZigzag)}, 0.5);
  const Json doc = ReportToJson(report);
  EXPECT_EQ(doc["passed"], false);
  EXPECT_EQ(doc["links"].size(), 1u);
  EXPECT_EQ(doc["links"][0]["distance"], 1.0);
  EXPECT_TRUE(doc["errors"].empty());
}

TEST(DlcDocument, Keys) {
  const Dlc dlc{{Link{{0, 0.0}, {3, 0.0}, 1.0}}};
  const Json doc = DlcToJson(kZigzag, dlc);
  EXPECT_EQ(doc["size"], 1);
  EXPECT_EQ(doc["links"][0]["end"]["x"], 3.0);
}

TEST(RenderSvg, CurveOnly) {
  const std::string svg = RenderSvg(kZigzag, std::nullopt, 0.5);
  EXPECT_EQ(Count(svg, "<path class=\"edge\""), kZigzag.edge_count());
  EXPECT_EQ(Count(svg, "<path class=\"link\""), 0u);
  EXPECT_EQ(Count(svg, "<circle class=\"neighbourhood\""), 0u);
  EXPECT_NE(svg.find("viewBox=\"-0.5 -1.5 5 2\""), std::string::npos) << svg;
}

TEST(RenderSvg, SimplificationAndDisks) {
  const Simplification simp{{{0, 0.0}, {1, 0.25}, {3, 1.0}}, 0.7, 2};
  const std::string svg = RenderSvg(kZigzag, simp, 0.7, {true, 1.0});
  EXPECT_EQ(Count(svg, "<path class=\"link\""), simp.link_count());
  EXPECT_EQ(Count(svg, "<circle class=\"link-endpoint\""), simp.chain.size());
  EXPECT_EQ(Count(svg, "<circle class=\"neighbourhood\""), kZigzag.size());
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
}

TEST(RenderSvg, Deterministic) {
  testing::Rng rng(81);
  for (int it = 0; it < 20; ++it) {
    const Polyline curve = testing::RandomCurve(rng, 12);
    const Simplification simp{{StartOf(curve), {4, 0.5}, EndOf(curve)}, 0.3, {}};
    EXPECT_EQ(RenderSvg(curve, simp, 0.3, {true, 2.0}),
              RenderSvg(curve, simp, 0.3, {true, 2.0}));
  }
}

}  // namespace
}  // namespace curvemin
