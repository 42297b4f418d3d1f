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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "curvemin/baselines.hpp"
#include "curvemin/dlc.hpp"
#include "curvemin/oracle.hpp"

namespace curvemin::cli {

inline constexpr std::array<std::string_view, 4> kAlgorithms = {
    "dlc2approx", "douglas-peucker", "imai-iri", "oracle"};

inline bool IsAlgorithm(std::string_view name) {
  for (auto a : kAlgorithms)
    if (a == name) return true;
  return false;
}

inline Simplification RunAlgorithm(std::string_view name, const Polyline& curve,
                                   double eps, std::size_t grid, double tol) {
  if (name == "dlc2approx") return Simplify2Approx(curve, eps, tol);
  if (name == "douglas-peucker") return DouglasPeucker(curve, eps);
  if (name == "imai-iri") return ImaiIri(curve, eps, tol);
  if (name == "oracle") {
    const GridSpec spec{grid};
    Simplification simp = OracleMinSimplification(curve, eps, spec, tol);
    simp.dlc_size = OracleMinDlc(curve, eps, spec, tol).size();
    return simp;
  }
  throw InputError("unknown algorithm '" + std::string(name) + "'");
}

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::vector<std::string> algorithms;
  // Epsilon as a multiple of the mean edge length of the generated curves.
  double relative_epsilon = 0.5;
  std::size_t repeat = 3;
  double tol = kDefaultTolerance;
};

// Deterministic random-walk curve with n vertices and unit mean step.
Polyline BenchCurve(std::size_t n);

nlohmann::json RunBench(const BenchConfig& config);

}  // namespace curvemin::cli
