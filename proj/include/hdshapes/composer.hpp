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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hdshapes/core.hpp"
#include "hdshapes/dataset.hpp"
#include "hdshapes/random.hpp"
#include "hdshapes/shapes.hpp"

namespace hdshapes {

// A cluster rotation: either a plan realized with gen_rotation or an
// explicit orthogonal matrix. Its dimension selects when it is applied:
// the shape's own dimension rotates before noise padding, the scene
// dimension p rotates after padding (before translation).
using Rotation = std::variant<RotationPlan, Matrix>;

struct MultiClusterSpec {
  std::vector<std::size_t> n;
  std::size_t k = 0;
  // k x p cluster centroids.
  Matrix loc;
  std::vector<double> scale;
  std::vector<std::string> shape;
  // Empty, or one optional rotation per cluster.
  std::vector<std::optional<Rotation>> rotation;
  bool is_bkg = false;
  // Empty, or per-cluster generator arguments beyond n and p.
  std::vector<ShapeParams> extras;
  bool shuffle = true;
};

inline constexpr double kPaddingSd = 0.2;
inline constexpr double kBackgroundFraction = 0.1;
inline constexpr const char* kBackgroundLabel = "background";

void validate(const MultiClusterSpec& spec);

// Labels per cluster: the shape name, with _1, _2, ... appended to names
// that occur more than once.
std::vector<std::string> cluster_labels(const std::vector<std::string>& shapes);

// Arguments handed to cluster c's generator: its extras plus n and, for
// kinds that take it, p.
ShapeParams cluster_params(const MultiClusterSpec& spec, std::size_t c);

// Generate -> scale -> rotate -> pad -> translate per cluster, then
// concatenate, optionally add background rows, and shuffle.
Dataset gen_multicluster(const MultiClusterSpec& spec, RandomStream& stream);

// Appends p_target - p columns drawn from N(mu, 0.2^2), mu being the mean of
// every existing coordinate entry.
Dataset pad_to_dim(const Dataset& ds, std::size_t p_target,
                   RandomStream& stream);

// x -> R (scale * x), then translates so the column means equal `center`
// when given.
Dataset apply_transform(const Dataset& ds, double scale,
                        const std::optional<Matrix>& rotation,
                        const std::optional<Vector>& center);

Matrix realize(const Rotation& rotation);

// Preset scenes.

struct PresetParams {
  std::optional<std::size_t> n;
  std::optional<std::size_t> p;
  std::optional<std::size_t> k;
};

struct PresetInfo {
  std::string name;
  std::string description;
  std::vector<std::string> params;
};

const std::vector<PresetInfo>& preset_registry();

MultiClusterSpec preset_spec(std::string_view name, const PresetParams& params);

Dataset make_preset(std::string_view name, const PresetParams& params,
                    RandomStream& stream);

}  // namespace hdshapes
