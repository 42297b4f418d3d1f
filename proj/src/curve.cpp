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

#include "curvemin/curve.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include <fmt/format.h>
#include <json.hpp>

namespace curvemin {

namespace {

bool Finite(const Point& p) { return std::isfinite(p.x()) && std::isfinite(p.y()); }

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double ParseNumber(std::string_view field, std::size_t line) {
  field = Trim(field);
  double value = 0.0;
  const auto* begin = field.data();
  const auto* end = begin + field.size();
  // from_chars rejects a leading '+'.
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(value))
    throw FormatError(
        fmt::format("line {}: invalid coordinate '{}'", line, field));
  return value;
}

std::vector<Point> ReadCsv(std::istream& in) {
  std::vector<Point> points;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (line == 1 && text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    if (const auto hash = text.find('#'); hash != std::string_view::npos)
      text = text.substr(0, hash);
    text = Trim(text);
    if (text.empty()) continue;
    const auto comma = text.find(',');
    if (comma == std::string_view::npos ||
        text.find(',', comma + 1) != std::string_view::npos)
      throw FormatError(
          fmt::format("line {}: expected 'x,y', got '{}'", line, text));
    points.emplace_back(ParseNumber(text.substr(0, comma), line),
                        ParseNumber(text.substr(comma + 1), line));
  }
  return points;
}

std::vector<Point> ReadGeoJson(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(fmt::format("GeoJSON parse error at byte {}: {}", e.byte,
                                  e.what()));
  }
  try {
    if (doc.at("type") == "FeatureCollection") {
      const auto& features = doc.at("features");
      if (features.size() != 1)
        throw FormatError("GeoJSON FeatureCollection must hold one feature");
      doc = features.at(0);
    }
    if (doc.at("type") == "Feature") doc = doc.at("geometry");
    if (doc.at("type") != "LineString")
      throw FormatError("GeoJSON geometry must be a LineString");
    std::vector<Point> points;
    std::size_t index = 0;
    for (const auto& c : doc.at("coordinates")) {
      if (!c.is_array() || c.size() < 2 || !c[0].is_number() ||
          !c[1].is_number())
        throw FormatError(
            fmt::format("GeoJSON coordinate {} is not a position", index));
      points.emplace_back(c[0].get<double>(), c[1].get<double>());
      ++index;
    }
    return points;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(fmt::format("GeoJSON structure error: {}", e.what()));
  }
}

}  // namespace

Polyline::Polyline(std::vector<Point> vertices, double tol)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2)
    throw InputError("a curve needs at least two distinct vertices");
  cumulative_.assign(1, 0.0);
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (!Finite(vertices_[k]))
      throw InputError(fmt::format("vertex {} is not finite", k));
    if (k == 0) continue;
    const double len = (vertices_[k] - vertices_[k - 1]).norm();
    if (len <= tol)
      throw InputError(
          fmt::format("vertices {} and {} coincide", k - 1, k));
    cumulative_.push_back(cumulative_.back() + len);
  }
}

Polyline Polyline::Collapsing(const std::vector<Point>& vertices, double tol) {
  std::vector<Point> kept;
  kept.reserve(vertices.size());
  for (const auto& p : vertices) {
    if (!Finite(p)) throw InputError("vertex is not finite");
    if (kept.empty() || (p - kept.back()).norm() > tol) kept.push_back(p);
  }
  return Polyline(std::move(kept), tol);
}

CurvePoint StartOf(const Polyline&) { return {0, 0.0}; }

CurvePoint EndOf(const Polyline& curve) {
  return {curve.edge_count() - 1, 1.0};
}

CurvePoint VertexPoint(const Polyline& curve, std::size_t k) {
  if (k + 1 >= curve.size()) return EndOf(curve);
  return {k, 0.0};
}

CurvePoint Canonicalize(const CurvePoint& cp, const Polyline& curve) {
  if (cp.edge >= curve.edge_count())
    throw InputError(fmt::format("edge index {} out of range", cp.edge));
  if (!(cp.t >= 0.0 && cp.t <= 1.0))
    throw InputError(fmt::format("edge parameter {} outside [0, 1]", cp.t));
  if (cp.t == 1.0 && cp.edge + 1 < curve.edge_count())
    return {cp.edge + 1, 0.0};
  return cp;
}

bool IsCanonical(const CurvePoint& cp, const Polyline& curve) {
  return cp.edge < curve.edge_count() && cp.t >= 0.0 &&
         (cp.t < 1.0 || (cp.t == 1.0 && cp.edge + 1 == curve.edge_count()));
}

Point Embed(const CurvePoint& cp, const Polyline& curve) {
  const Point& a = curve.vertex(cp.edge);
  const Point& b = curve.vertex(cp.edge + 1);
  if (cp.t == 0.0) return a;
  if (cp.t == 1.0) return b;
  return (1.0 - cp.t) * a + cp.t * b;
}

double ArcLength(const CurvePoint& cp, const Polyline& curve) {
  return curve.ArcLengthTo(cp.edge) + cp.t * curve.edge(cp.edge).length();
}

Order CompareAlongCurve(const CurvePoint& x, const CurvePoint& y,
                        const Polyline& curve) {
  const CurvePoint cx = Canonicalize(x, curve);
  const CurvePoint cy = Canonicalize(y, curve);
  if (cx < cy) return Order::kBefore;
  if (cy < cx) return Order::kAfter;
  return Order::kEqual;
}

bool OnSameEdge(const CurvePoint& x, const CurvePoint& y,
                const Polyline& curve) {
  const CurvePoint cx = Canonicalize(x, curve);
  const CurvePoint cy = Canonicalize(y, curve);
  if (cy < cx) return false;
  return cx.edge == cy.edge || (cy.edge == cx.edge + 1 && cy.t == 0.0);
}

std::vector<std::size_t> InteriorVertices(const Polyline& curve,
                                          const CurvePoint& x,
                                          const CurvePoint& y) {
  const CurvePoint cx = Canonicalize(x, curve);
  const CurvePoint cy = Canonicalize(y, curve);
  if (cy < cx) throw OrderingError("link end precedes its start");
  std::vector<std::size_t> indices;
  for (std::size_t k = cx.edge + 1; k <= cy.edge; ++k) indices.push_back(k);
  return indices;
}

CurveFormat FormatFromPath(const std::string& path) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".geojson" || ext == ".json") return CurveFormat::kGeoJson;
  return CurveFormat::kCsv;
}

Polyline LoadCurve(std::istream& in, CurveFormat format, double tol) {
  const auto points =
      format == CurveFormat::kCsv ? ReadCsv(in) : ReadGeoJson(in);
  return Polyline::Collapsing(points, tol);
}

Polyline LoadCurveFile(const std::string& path, double tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path));
  return LoadCurve(in, FormatFromPath(path), tol);
}

void SaveCurve(std::ostream& out, const Polyline& curve, CurveFormat format) {
  if (format == CurveFormat::kCsv) {
    for (const auto& p : curve.vertices())
      out << fmt::format("{:.17g},{:.17g}\n", p.x(), p.y());
    return;
  }
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& p : curve.vertices()) coords.push_back({p.x(), p.y()});
  const nlohmann::json doc = {
      {"type", "Feature"},
      {"properties", nlohmann::json::object()},
      {"geometry", {{"type", "LineString"}, {"coordinates", coords}}}};
  out << doc.dump(2) << '\n';
}

}  // namespace curvemin
