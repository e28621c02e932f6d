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

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "hdshapes/composer.hpp"
#include "hdshapes/error.hpp"

namespace hdshapes {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::size_t kDefaultPresetN = 1000;

struct Settings {
  std::size_t n;
  std::size_t p;
  std::size_t k;
};

struct PresetEntry {
  PresetInfo info;
  std::size_t default_p;
  std::size_t min_p;
  // 0 when k is not accepted.
  std::size_t default_k;
  std::function<MultiClusterSpec(const Settings&)> build;
};

MultiClusterSpec blank(std::size_t k, std::size_t p) {
  MultiClusterSpec spec;
  spec.k = k;
  spec.loc = Matrix::Zero(static_cast<Eigen::Index>(k),
                          static_cast<Eigen::Index>(p));
  spec.scale.assign(k, 1.0);
  spec.extras.assign(k, ShapeParams{});
  return spec;
}

ShapeParams with_p(std::size_t p) {
  ShapeParams params;
  params.p = p;
  return params;
}

// Quarter turn in the (x2, x3) plane of the scene.
Rotation quarter_turn(std::size_t p) {
  return RotationPlan{p, {PlaneRotation{2, 3, kPi / 2.0}}};
}

// Two rings, the second turned upright and pushed through the first.
MultiClusterSpec linked(const Settings& s, const std::string& shape,
                        std::size_t shape_p) {
  MultiClusterSpec spec = blank(2, s.p);
  spec.n = gen_nsum(s.n, 2);
  spec.shape = {shape, shape};
  spec.extras = {with_p(shape_p), with_p(shape_p)};
  spec.loc(1, 0) = 1.0;
  spec.rotation = {std::nullopt, quarter_turn(s.p)};
  return spec;
}

// k rings in a row, alternating between flat and upright.
MultiClusterSpec chained(const Settings& s, const std::string& shape,
                         std::size_t shape_p) {
  MultiClusterSpec spec = blank(s.k, s.p);
  spec.n = gen_nsum(s.n, s.k);
  spec.shape.assign(s.k, shape);
  spec.extras.assign(s.k, with_p(shape_p));
  spec.rotation.assign(s.k, std::nullopt);
  for (std::size_t c = 0; c < s.k; ++c) {
    spec.loc(static_cast<Eigen::Index>(c), 0) = 1.3 * static_cast<double>(c);
    if (c % 2 == 1) spec.rotation[c] = quarter_turn(s.p);
  }
  return spec;
}

// k rings evenly spaced on a circle of radius 3 around a Gaussian blob.
MultiClusterSpec ringed(const Settings& s, const std::string& shape,
                        std::size_t shape_p) {
  MultiClusterSpec spec = blank(s.k + 1, s.p);
  spec.n = gen_nsum(s.n, s.k + 1);
  spec.shape.assign(s.k, shape);
  spec.shape.push_back("gaussian");
  spec.extras.assign(s.k, with_p(shape_p));
  spec.extras.emplace_back();
  for (std::size_t c = 0; c < s.k; ++c) {
    const double angle = 2.0 * kPi * static_cast<double>(c) /
                         static_cast<double>(s.k);
    spec.loc(static_cast<Eigen::Index>(c), 0) = 3.0 * std::cos(angle);
    spec.loc(static_cast<Eigen::Index>(c), 1) = 3.0 * std::sin(angle);
  }
  spec.scale.back() = 0.5;
  return spec;
}

// Two unit grids whose centroids differ by `offset` in x1 and x2.
MultiClusterSpec grid_pair(const Settings& s, double offset) {
  MultiClusterSpec spec = blank(2, s.p);
  spec.n = gen_nsum(s.n, 2);
  spec.shape = {"gridcube", "gridcube"};
  spec.extras = {with_p(2), with_p(2)};
  spec.loc(1, 0) = offset;
  spec.loc(1, 1) = offset;
  return spec;
}

double half_lattice_step(std::size_t n) {
  const auto levels = gen_nproduct(n, 2);
  return levels[0] > 1 ? 0.5 / static_cast<double>(levels[0] - 1) : 0.5;
}

const std::vector<PresetEntry>& entries() {
  static const std::vector<PresetEntry> table = [] {
    std::vector<PresetEntry> t;
    const std::vector<std::string> np{"n", "p"};
    const std::vector<std::string> npk{"n", "p", "k"};

    t.push_back({{"mobiusgau", "Mobius strip with a Gaussian blob at its center", np},
                 4, 3, 0, [](const Settings& s) {
                   MultiClusterSpec spec = blank(2, s.p);
                   spec.n = gen_nsum(s.n, 2);
                   spec.shape = {"mobius", "gaussian"};
                   spec.scale = {1.0, 0.25};
                   return spec;
                 }});
    t.push_back({{"multigau", "k Gaussian clusters at separated centers", npk},
                 4, 2, 4, [](const Settings& s) {
                   MultiClusterSpec spec = blank(s.k, s.p);
                   spec.n = gen_nsum(s.n, s.k);
                   spec.shape.assign(s.k, "gaussian");
                   for (std::size_t c = 0; c < s.k; ++c) {
                     spec.loc(static_cast<Eigen::Index>(c),
                              static_cast<Eigen::Index>(c % s.p)) =
                         6.0 * static_cast<double>(1 + c / s.p);
                   }
                   return spec;
                 }});
    t.push_back({{"curvygau", "quadratic curve with a Gaussian blob above it", np},
                 4, 2, 0, [](const Settings& s) {
                   MultiClusterSpec spec = blank(2, s.p);
                   spec.n = gen_nsum(s.n, 2);
                   spec.shape = {"quadratic", "gaussian"};
                   spec.scale = {1.0, 0.2};
                   spec.loc(1, 1) = 1.2;
                   return spec;
                 }});
    t.push_back({{"klink_circles", "two interlocking circles", np}, 3, 3, 0,
                 [](const Settings& s) { return linked(s, "circle", 2); }});
    t.push_back({{"chain_circles", "k circles linked in a chain", npk}, 3, 3, 3,
                 [](const Settings& s) { return chained(s, "circle", 2); }});
    t.push_back({{"klink_curvycycle", "two interlocking curvy cycles", np}, 3, 3,
                 0, [](const Settings& s) { return linked(s, "curvycycle", 3); }});
    t.push_back({{"chain_curvycycle", "k curvy cycles linked in a chain", npk}, 3,
                 3, 3,
                 [](const Settings& s) { return chained(s, "curvycycle", 3); }});
    t.push_back({{"gaucircles", "k circles around a central Gaussian", npk}, 4,
                 2, 4, [](const Settings& s) { return ringed(s, "circle", 2); }});
    t.push_back({{"gaucurvycycle", "k curvy cycles around a central Gaussian",
                  npk},
                 4, 3, 4,
                 [](const Settings& s) { return ringed(s, "curvycycle", 3); }});
    t.push_back({{"onegrid", "a single 2-D grid", np}, 2, 2, 0,
                 [](const Settings& s) {
                   MultiClusterSpec spec = blank(1, s.p);
                   spec.n = {s.n};
                   spec.shape = {"gridcube"};
                   spec.extras = {with_p(2)};
                   return spec;
                 }});
    t.push_back({{"twogrid_overlap",
                  "two 2-D grids interleaved by half a lattice step", np},
                 2, 2, 0, [](const Settings& s) {
                   return grid_pair(s, half_lattice_step(gen_nsum(s.n, 2)[1]));
                 }});
    t.push_back({{"twogrid_shift", "two 2-D grids shifted by half their width",
                  np},
                 2, 2, 0, [](const Settings& s) { return grid_pair(s, 0.5); }});
    t.push_back({{"shape_para", "two parallel quadratic curves", np}, 2, 2, 0,
                 [](const Settings& s) {
                   MultiClusterSpec spec = blank(2, s.p);
                   spec.n = gen_nsum(s.n, 2);
                   spec.shape = {"quadratic", "quadratic"};
                   spec.loc(1, 1) = 1.0;
                   return spec;
                 }});
    return t;
  }();
  return table;
}

const PresetEntry& find_preset(std::string_view name) {
  for (const auto& entry : entries()) {
    if (entry.info.name == name) return entry;
  }
  fail(ErrorCode::kRegistry, "unknown preset '" + std::string(name) + "'");
}

}  // namespace

const std::vector<PresetInfo>& preset_registry() {
  static const std::vector<PresetInfo> infos = [] {
    std::vector<PresetInfo> out;
    for (const auto& entry : entries()) out.push_back(entry.info);
    return out;
  }();
  return infos;
}

MultiClusterSpec preset_spec(std::string_view name, const PresetParams& params) {
  const PresetEntry& entry = find_preset(name);
  const std::string where = "preset " + entry.info.name + ": ";
  require(!params.k || entry.default_k > 0, ErrorCode::kRejectedParameter,
          where + "does not accept k");
  Settings s{params.n.value_or(kDefaultPresetN),
             params.p.value_or(entry.default_p),
             params.k.value_or(entry.default_k)};
  require(s.p >= entry.min_p, ErrorCode::kDimension,
          where + "needs p >= " + std::to_string(entry.min_p));
  require(entry.default_k == 0 || s.k >= 1, ErrorCode::kShape,
          where + "k must be >= 1");
  const std::size_t clusters = entry.default_k == 0 ? 1 : s.k;
  require(s.n >= clusters + 1, ErrorCode::kShape,
          where + "n is too small for the number of clusters");
  return entry.build(s);
}

Dataset make_preset(std::string_view name, const PresetParams& params,
                    RandomStream& stream) {
  return gen_multicluster(preset_spec(name, params), stream);
}

}  // namespace hdshapes
