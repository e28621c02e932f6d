// Copyright 2026 The hdshapes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>

#include "hdshapes/dataset.hpp"
#include "hdshapes/random.hpp"

namespace hdshapes {

struct HoleSpec {
  // Defaults to the column means of the dataset being punched.
  std::optional<Vector> anchor;
  double r = 0.0;
};

struct HoleResult {
  Dataset data;
  Vector anchor;
  // Fewer than 10% of the input rows survived.
  bool low_retention = false;
};

inline constexpr double kLowRetentionFraction = 0.1;

// Keeps the rows whose Euclidean distance to the anchor is strictly greater
// than r, in input order. Throws degenerate-hole when nothing survives.
HoleResult gen_hole(const Dataset& ds, const HoleSpec& spec);

// S-curve with a ball of radius r_hole removed around its mean; exactly n
// rows.
HoleResult gen_scurvehole(std::size_t n, double r_hole, RandomStream& stream);

// Uniform cube in [0,1]^p with a ball of radius r_hole removed around its
// mean; exactly n rows.
HoleResult gen_unifcubehole(std::size_t n, std::size_t p, double r_hole,
                            RandomStream& stream);

}  // namespace hdshapes
