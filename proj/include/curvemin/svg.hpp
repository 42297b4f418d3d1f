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

#include <optional>
#include <string>

#include "curvemin/feasibility.hpp"

namespace curvemin {

struct RenderOptions {
  // Draw the epsilon-disk around every input vertex.
  bool show_disks = false;
  double stroke_scale = 1.0;
};

// Deterministic SVG: one solid path per input edge (class "edge"), one
// dashed path per simplification link (class "link"), markers on link
// endpoints, optional disks. The view box is the bounding box grown by
// epsilon (or 5% of the diagonal when epsilon is zero).
std::string RenderSvg(const Polyline& curve,
                      const std::optional<Simplification>& simp,
                      double epsilon, const RenderOptions& options = {});

}  // namespace curvemin
