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

#include <fmt/format.h>

namespace curvemin {

namespace {

Json OptionalIndex(const std::optional<std::size_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json CurvePointToJson(const Polyline& curve, const CurvePoint& cp) {
  const Point p = Embed(cp, curve);
  return {{"edge", cp.edge}, {"t", cp.t}, {"x", p.x()}, {"y", p.y()}};
}

Json SimplificationToJson(const Polyline& curve, const Simplification& simp,
                          const std::string& algorithm,
                          const VerificationReport& report) {
  Json chain = Json::array();
  for (const auto& cp : simp.chain) chain.push_back(CurvePointToJson(curve, cp));
  return {{"algorithm", algorithm},
          {"epsilon", simp.epsilon},
          {"chain", chain},
          {"link_count", simp.link_count()},
          {"dlc_size", OptionalIndex(simp.dlc_size)},
          {"verified", report.passed},
          {"max_distance", report.MaxDistance()}};
}

Simplification SimplificationFromJson(const Json& doc) {
  try {
    Simplification simp;
    simp.epsilon = doc.at("epsilon").get<double>();
    for (const auto& item : doc.at("chain"))
      simp.chain.push_back(
          {item.at("edge").get<std::size_t>(), item.at("t").get<double>()});
    if (doc.contains("dlc_size") && !doc["dlc_size"].is_null())
      simp.dlc_size = doc["dlc_size"].get<std::size_t>();
    return simp;
  } catch (const Json::exception& e) {
    throw FormatError(fmt::format("malformed simplification document: {}",
                                  e.what()));
  }
}

Json ReportToJson(const VerificationReport& report) {
  Json links = Json::array();
  for (const auto& l : report.links) {
    links.push_back({{"start", {{"edge", l.start.edge}, {"t", l.start.t}}},
                     {"end", {{"edge", l.end.edge}, {"t", l.end.t}}},
                     {"distance", l.distance},
                     {"worst_vertex", OptionalIndex(l.worst_vertex)}});
  }
  return {{"epsilon", report.epsilon},
          {"tolerance", report.tolerance},
          {"passed", report.passed},
          {"max_distance", report.MaxDistance()},
          {"links", links},
          {"errors", report.errors}};
}

Json DlcToJson(const Polyline& curve, const Dlc& dlc) {
  Json links = Json::array();
  for (const auto& l : dlc.links) {
    links.push_back({{"start", CurvePointToJson(curve, l.start)},
                     {"end", CurvePointToJson(curve, l.end)}});
  }
  return {{"size", dlc.size()}, {"links", links}};
}

std::string Dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace curvemin
