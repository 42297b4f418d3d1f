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

// curvemin: curve-restricted polyline simplification from the command line.
//
// Exit status: 0 success, 1 domain or configuration error (including a
// failed verification), 2 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "curvemin/document.hpp"
#include "curvemin/svg.hpp"
#include "run.hpp"

namespace curvemin::cli {

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kIoError = 2;

struct Config {
  std::string input;
  std::string output;
  std::string simplification;
  std::string svg;
  double epsilon = 0.0;
  std::string algorithm = "dlc2approx";
  std::string render_algorithm;
  std::vector<std::string> algorithms;
  std::size_t grid = 16;
  std::optional<double> tolerance;
  bool show_disks = false;
  double stroke_scale = 1.0;
  std::vector<std::size_t> sizes;
  std::size_t repeat = 3;
};

// --tolerance, then CURVEMIN_TOL, then the default.
double ResolveTolerance(const Config& config) {
  if (config.tolerance) return *config.tolerance;
  if (const char* env = std::getenv("CURVEMIN_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value >= 0.0))
      throw InputError(fmt::format("CURVEMIN_TOL='{}' is not a tolerance", env));
    return value;
  }
  return kDefaultTolerance;
}

void RequirePositiveEpsilon(double eps) {
  if (!(eps > 0.0)) throw InputError("--epsilon must be positive");
}

void CheckAlgorithm(const std::string& name, std::size_t grid) {
  if (!IsAlgorithm(name))
    throw InputError(fmt::format("unknown algorithm '{}'", name));
  if (name == "oracle" && grid < 2) throw InputError("--grid must be >= 2");
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot write '{}'", path));
  out << text;
  if (!out) throw IoError(fmt::format("failed writing '{}'", path));
}

// Writes to path, or to stdout when path is empty.
void Emit(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    WriteText(path, text);
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path));
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(fmt::format("'{}': {}", path, e.what()));
  }
}

int CmdSimplify(const Config& config) {
  const double tol = ResolveTolerance(config);
  RequirePositiveEpsilon(config.epsilon);
  CheckAlgorithm(config.algorithm, config.grid);
  const Polyline curve = LoadCurveFile(config.input, tol);
  const Simplification simp =
      RunAlgorithm(config.algorithm, curve, config.epsilon, config.grid, tol);
  const VerificationReport report = Verify(curve, simp, tol);
  Emit(config.output,
       Dump(SimplificationToJson(curve, simp, config.algorithm, report)));
  if (!config.svg.empty())
    WriteText(config.svg, RenderSvg(curve, simp, config.epsilon,
                                    {config.show_disks, config.stroke_scale}));
  auto& log = config.output.empty() ? std::cerr : std::cout;
  log << fmt::format("links: {}  dlc: {}  verified: {}\n", simp.link_count(),
                     simp.dlc_size ? std::to_string(*simp.dlc_size) : "-",
                     report.passed ? "yes" : "no");
  return report.passed ? kOk : kDomainError;
}

int CmdVerify(const Config& config) {
  const double tol = ResolveTolerance(config);
  const Polyline curve = LoadCurveFile(config.input, tol);
  Simplification simp =
      SimplificationFromJson(ReadJsonFile(config.simplification));
  if (config.epsilon > 0.0) simp.epsilon = config.epsilon;
  RequirePositiveEpsilon(simp.epsilon);
  const VerificationReport report = Verify(curve, simp, tol);
  Emit(config.output, Dump(ReportToJson(report)));
  if (!config.output.empty())
    std::cout << fmt::format("verified: {}  max distance: {:.17g}\n",
                             report.passed ? "yes" : "no",
                             report.MaxDistance());
  return report.passed ? kOk : kDomainError;
}

int CmdCompare(const Config& config) {
  const double tol = ResolveTolerance(config);
  RequirePositiveEpsilon(config.epsilon);
  std::vector<std::string> algorithms = config.algorithms;
  if (algorithms.empty())
    algorithms = {"dlc2approx", "douglas-peucker", "imai-iri"};
  for (const auto& a : algorithms) CheckAlgorithm(a, config.grid);
  const Polyline curve = LoadCurveFile(config.input, tol);

  const auto dlc = MinDlc(curve, config.epsilon, tol);
  Json results = Json::array();
  std::string table = fmt::format("{:<16} {:>6} {:>14} {:>9}\n", "algorithm",
                                  "links", "max distance", "verified");
  bool all_passed = true;
  for (const auto& a : algorithms) {
    const Simplification simp =
        RunAlgorithm(a, curve, config.epsilon, config.grid, tol);
    const VerificationReport report = Verify(curve, simp, tol);
    all_passed = all_passed && report.passed;
    results.push_back({{"algorithm", a},
                       {"link_count", simp.link_count()},
                       {"max_distance", report.MaxDistance()},
                       {"verified", report.passed}});
    table += fmt::format("{:<16} {:>6} {:>14.6g} {:>9}\n", a,
                         simp.link_count(), report.MaxDistance(),
                         report.passed ? "yes" : "no");
  }
  const Json doc = {{"epsilon", config.epsilon},
                    {"vertices", curve.size()},
                    {"dlc_size", dlc ? Json(dlc->size()) : Json(nullptr)},
                    {"results", results}};
  Emit(config.output, Dump(doc));
  auto& log = config.output.empty() ? std::cerr : std::cout;
  log << table;
  return all_passed ? kOk : kDomainError;
}

int CmdOracle(const Config& config) {
  Config copy = config;
  copy.algorithm = "oracle";
  return CmdSimplify(copy);
}

int CmdRender(const Config& config) {
  const double tol = ResolveTolerance(config);
  const Polyline curve = LoadCurveFile(config.input, tol);
  std::optional<Simplification> simp;
  double eps = config.epsilon;
  if (!config.simplification.empty()) {
    simp = SimplificationFromJson(ReadJsonFile(config.simplification));
    for (const auto& cp : simp->chain) {
      if (cp.edge >= curve.edge_count() || !(cp.t >= 0.0 && cp.t <= 1.0))
        throw InputError("simplification does not fit the curve");
    }
    if (!(eps > 0.0)) eps = simp->epsilon;
  } else if (!config.render_algorithm.empty()) {
    RequirePositiveEpsilon(eps);
    CheckAlgorithm(config.render_algorithm, config.grid);
    simp = RunAlgorithm(config.render_algorithm, curve, eps, config.grid, tol);
  }
  const std::string path = config.svg.empty() ? config.output : config.svg;
  Emit(path, RenderSvg(curve, simp, eps, {config.show_disks,
                                          config.stroke_scale}));
  return kOk;
}

int CmdBench(const Config& config) {
  BenchConfig bench;
  bench.sizes = config.sizes.empty() ? std::vector<std::size_t>{8, 16, 24}
                                     : config.sizes;
  bench.algorithms = config.algorithms;
  if (bench.algorithms.empty())
    bench.algorithms = {"dlc2approx", "douglas-peucker", "imai-iri"};
  for (const auto& a : bench.algorithms) CheckAlgorithm(a, config.grid);
  for (const auto n : bench.sizes)
    if (n < 2) throw InputError("--sizes entries must be >= 2");
  if (config.epsilon > 0.0) bench.relative_epsilon = config.epsilon;
  bench.repeat = config.repeat;
  bench.tol = ResolveTolerance(config);
  const Json doc = RunBench(bench);
  Emit(config.output, Dump(doc));
  auto& log = config.output.empty() ? std::cerr : std::cout;
  for (const auto& row : doc["rows"])
    log << fmt::format("{:<16} n={:<7} {:.6f} s\n",
                       row["algorithm"].get<std::string>(),
                       row["n"].get<std::size_t>(),
                       row["seconds"].get<double>());
  for (const auto& [name, slope] : doc["log_log_slope"].items())
    log << fmt::format("{:<16} slope {}\n", name, slope.dump());
  return kOk;
}

}  // namespace

int Main(int argc, char** argv) {
  CLI::App app{"Curve-restricted min-# polyline simplification"};
  app.require_subcommand(1);
  Config config;

  auto add_tolerance = [&](CLI::App* cmd) {
    cmd->add_option("--tolerance", config.tolerance,
                    "Absolute comparison tolerance (overrides CURVEMIN_TOL)");
  };
  auto add_render = [&](CLI::App* cmd) {
    cmd->add_flag("--show-disks", config.show_disks,
                  "Draw the epsilon-disk of every vertex");
    cmd->add_option("--stroke-scale", config.stroke_scale, "Stroke width factor");
  };

  auto* simplify = app.add_subcommand("simplify", "Simplify a curve");
  simplify->add_option("-i,--input", config.input, "Curve (.csv or .geojson)")
      ->required();
  simplify->add_option("-o,--output", config.output, "Simplification document");
  simplify->add_option("-e,--epsilon", config.epsilon, "Error bound")->required();
  simplify->add_option("-a,--algorithm", config.algorithm,
                       "dlc2approx | douglas-peucker | imai-iri | oracle");
  simplify->add_option("--grid", config.grid, "Oracle samples per edge");
  simplify->add_option("--svg", config.svg, "Also write an SVG picture");
  add_tolerance(simplify);
  add_render(simplify);

  auto* verify = app.add_subcommand("verify", "Check a simplification document");
  verify->add_option("-i,--input", config.input, "Curve")->required();
  verify->add_option("-s,--simplification", config.simplification,
                     "Simplification document")
      ->required();
  verify->add_option("-e,--epsilon", config.epsilon,
                     "Error bound (defaults to the document's)");
  verify->add_option("-o,--output", config.output, "Report document");
  add_tolerance(verify);

  auto* compare = app.add_subcommand("compare", "Run several algorithms");
  compare->add_option("-i,--input", config.input, "Curve")->required();
  compare->add_option("-e,--epsilon", config.epsilon, "Error bound")->required();
  compare->add_option("-a,--algorithm", config.algorithms,
                      "Algorithms to run (comma separated)")
      ->delimiter(',');
  compare->add_option("--grid", config.grid, "Oracle samples per edge");
  compare->add_option("-o,--output", config.output, "Comparison document");
  add_tolerance(compare);

  auto* oracle = app.add_subcommand("oracle", "Grid brute-force simplification");
  oracle->add_option("-i,--input", config.input, "Curve")->required();
  oracle->add_option("-e,--epsilon", config.epsilon, "Error bound")->required();
  oracle->add_option("--grid", config.grid, "Samples per edge");
  oracle->add_option("-o,--output", config.output, "Simplification document");
  oracle->add_option("--svg", config.svg, "Also write an SVG picture");
  add_tolerance(oracle);
  add_render(oracle);

  auto* render = app.add_subcommand("render", "Draw a curve as SVG");
  render->add_option("-i,--input", config.input, "Curve")->required();
  render->add_option("-s,--simplification", config.simplification,
                     "Simplification document to overlay");
  render->add_option("-e,--epsilon", config.epsilon,
                     "Disk radius / error bound");
  render->add_option("-a,--algorithm", config.render_algorithm,
                     "Algorithm to run when no document is given");
  render->add_option("--grid", config.grid, "Oracle samples per edge");
  render->add_option("--svg", config.svg, "Output SVG path");
  render->add_option("-o,--output", config.output, "Output SVG path");
  add_tolerance(render);
  add_render(render);

  auto* bench = app.add_subcommand("bench", "Time the algorithms");
  bench->add_option("--sizes", config.sizes, "Curve sizes (comma separated)")
      ->delimiter(',');
  bench->add_option("-a,--algorithm", config.algorithms,
                    "Algorithms to time (comma separated)")
      ->delimiter(',');
  bench->add_option("-e,--epsilon", config.epsilon,
                    "Error bound as a multiple of the mean edge length");
  bench->add_option("--repeat", config.repeat, "Runs per size (best kept)");
  bench->add_option("-o,--output", config.output, "Timing document");
  add_tolerance(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kDomainError;
  }

  try {
    if (*simplify) return CmdSimplify(config);
    if (*verify) return CmdVerify(config);
    if (*compare) return CmdCompare(config);
    if (*oracle) return CmdOracle(config);
    if (*render) return CmdRender(config);
    if (*bench) return CmdBench(config);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kDomainError;
}

}  // namespace curvemin::cli

int main(int argc, char** argv) { return curvemin::cli::Main(argc, argv); }
