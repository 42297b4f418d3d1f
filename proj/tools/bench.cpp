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

#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>

#include "run.hpp"

namespace curvemin::cli {

namespace {

// Least-squares slope of log(seconds) against log(n).
double LogLogSlope(const std::vector<double>& n, const std::vector<double>& s) {
  const std::size_t count = n.size();
  if (count < 2) return std::numeric_limits<double>::quiet_NaN();
  Eigen::MatrixXd design(count, 2);
  Eigen::VectorXd rhs(count);
  for (std::size_t r = 0; r < count; ++r) {
    design(r, 0) = std::log(n[r]);
    design(r, 1) = 1.0;
    rhs(r) = std::log(std::max(s[r], 1e-9));
  }
  const Eigen::Vector2d fit =
      (design.transpose() * design).ldlt().solve(design.transpose() * rhs);
  return fit(0);
}

}  // namespace

Polyline BenchCurve(std::size_t n) {
  std::mt19937_64 rng(0x5eed + n);
  std::uniform_real_distribution<double> turn(-1.2, 1.2);
  std::uniform_real_distribution<double> step(0.5, 1.5);
  std::vector<Point> vertices{Point(0.0, 0.0)};
  double heading = 0.0;
  while (vertices.size() < n) {
    heading += turn(rng);
    vertices.push_back(vertices.back() +
                       step(rng) * Point(std::cos(heading), std::sin(heading)));
  }
  return Polyline(std::move(vertices));
}

nlohmann::json RunBench(const BenchConfig& config) {
  using Clock = std::chrono::steady_clock;
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json slopes = nlohmann::json::object();
  for (const auto& algorithm : config.algorithms) {
    std::vector<double> ns;
    std::vector<double> seconds;
    for (const std::size_t n : config.sizes) {
      const Polyline curve = BenchCurve(n);
      const double eps =
          config.relative_epsilon * curve.Length() / curve.edge_count();
      double best = std::numeric_limits<double>::infinity();
      std::size_t links = 0;
      for (std::size_t r = 0; r < std::max<std::size_t>(1, config.repeat);
           ++r) {
        const auto start = Clock::now();
        const Simplification simp =
            RunAlgorithm(algorithm, curve, eps, 16, config.tol);
        const std::chrono::duration<double> took = Clock::now() - start;
        best = std::min(best, took.count());
        links = simp.link_count();
      }
      ns.push_back(static_cast<double>(n));
      seconds.push_back(best);
      rows.push_back({{"algorithm", algorithm},
                      {"n", n},
                      {"epsilon", eps},
                      {"seconds", best},
                      {"link_count", links}});
    }
    const double slope = LogLogSlope(ns, seconds);
    slopes[algorithm] = std::isfinite(slope) ? nlohmann::json(slope)
                                             : nlohmann::json(nullptr);
  }
  return {{"rows", rows}, {"log_log_slope", slopes}};
}

}  // namespace curvemin::cli
