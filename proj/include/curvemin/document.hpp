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

// JSON documents exchanged by the command-line tool. Key sets are stable;
// absent values are written as null. Numbers are written with enough digits
// to round-trip exactly.

#pragma once

#include <string>

#include <json.hpp>

#include "curvemin/dlc.hpp"

namespace curvemin {

using Json = nlohmann::json;

// {"edge", "t", "x", "y"}
Json CurvePointToJson(const Polyline& curve, const CurvePoint& cp);

// {"algorithm", "epsilon", "chain", "link_count", "dlc_size", "verified",
//  "max_distance"}
Json SimplificationToJson(const Polyline& curve, const Simplification& simp,
                          const std::string& algorithm,
                          const VerificationReport& report);

// Reads "epsilon", "chain" (edge and t) and "dlc_size". Throws FormatError.
Simplification SimplificationFromJson(const Json& doc);

// {"epsilon", "tolerance", "passed", "max_distance", "links", "errors"}
Json ReportToJson(const VerificationReport& report);

// {"size", "links": [{"start", "end"}]}
Json DlcToJson(const Polyline& curve, const Dlc& dlc);

// Two-space indented, trailing newline.
std::string Dump(const Json& doc);

}  // namespace curvemin
