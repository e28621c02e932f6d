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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hdshapes/dataset.hpp"
#include "hdshapes/random.hpp"

namespace hdshapes {

using Interval = std::pair<double, double>;

// Every argument a shape generator understands. Unset fields fall back to
// the generator's default; a set field that the chosen kind does not accept
// is rejected by validate_params().
struct ShapeParams {
  std::optional<std::size_t> n;
  std::optional<std::size_t> p;
  std::optional<std::size_t> k;
  std::optional<double> h;
  std::optional<double> ratio;
  std::optional<Matrix> s;
  std::optional<double> r;
  std::optional<Interval> w;
  std::optional<std::size_t> steps;
  std::optional<std::size_t> spins;
  std::optional<double> hc;
  std::optional<double> non_fac;
  std::optional<double> l;
  std::optional<Interval> l_vec;
  std::optional<double> rt;
  std::optional<double> rb;
  std::optional<std::vector<std::size_t>> n_vec;
  std::optional<Interval> r_vec;
  std::optional<double> spe;
  std::optional<Interval> range;
  std::optional<bool> allow_share;

  // Names of the fields that are set, in declaration order.
  std::vector<std::string> provided() const;
};

// Names of every ShapeParams field, in declaration order.
const std::vector<std::string>& all_param_names();

struct ShapeInfo {
  std::string name;
  std::string description;
  // Accepted parameter names; `n` is always first.
  std::vector<std::string> params;
  // Column count when the kind does not take p.
  std::size_t intrinsic_dim;
  bool takes_p;
  // Smallest accepted p (equals intrinsic_dim when takes_p is false).
  std::size_t min_p;
  // Grid kinds return approximately n rows.
  bool exact_n;
  std::function<Dataset(const ShapeParams&, RandomStream&)> generate;
};

const std::vector<ShapeInfo>& shape_registry();
const ShapeInfo& find_shape(std::string_view name);
bool has_shape(std::string_view name);

// Rejects fields the kind does not accept (rejected-parameter error).
void validate_params(const ShapeInfo& info, const ShapeParams& params);

// Output column count for the given parameters.
std::size_t output_dim(const ShapeInfo& info, const ShapeParams& params);

// Looks up `name`, validates `params`, and runs the generator.
Dataset generate_shape(std::string_view name, const ShapeParams& params,
                       RandomStream& stream);

// ---------------------------------------------------------------------------
// Branching structures.

enum class BranchKind { kLinear, kCurvy, kExp, kOrgLinear, kOrgCurvy };

inline constexpr double kBranchJitter = 0.1;
inline constexpr double kOrgBranchNoiseSd = 0.05;

struct BranchInfo {
  std::size_t size = 0;
  double slope = 0.0;
  // Domain of the driving coordinate.
  double lower = 0.0;
  double upper = 0.0;
  double x_start = 0.0;
  double y_start = 0.0;
  // Active coordinate pair (0-based); (0, 1) for the planar kinds.
  std::size_t axis_in = 0;
  std::size_t axis_out = 1;
  // Started from a point of an earlier branch.
  bool attached = false;
};

struct Branches {
  Dataset data;
  std::vector<BranchInfo> branches;
};

Branches gen_branches(BranchKind kind, std::size_t n, std::size_t k,
                      std::size_t p, bool allow_share, RandomStream& stream);

// ---------------------------------------------------------------------------
// Solid and surface shapes.

Dataset gen_cone(std::size_t n, std::size_t p, double h, double ratio,
                 RandomStream& stream);

enum class CubeKind { kGrid, kUnif };
Dataset gen_cube(CubeKind kind, std::size_t n, std::size_t p,
                 RandomStream& stream);

// Empty covariance means the identity.
Dataset gen_gaussian(std::size_t n, std::size_t p, const Matrix& covariance,
                     RandomStream& stream);

struct LongLinear {
  Dataset data;
  Vector scales;
  Vector shifts;
};
LongLinear gen_longlinear(std::size_t n, std::size_t p, RandomStream& stream);

Dataset gen_mobius(std::size_t n, RandomStream& stream);

enum class PolynomialKind { kQuadratic, kCubic };
Dataset gen_polynomial(PolynomialKind kind, std::size_t n, Interval range,
                       RandomStream& stream);

Dataset gen_scurve(std::size_t n, RandomStream& stream);
Dataset gen_swissroll(std::size_t n, Interval w, RandomStream& stream);

// ---------------------------------------------------------------------------
// Pyramids.

enum class PyramidKind { kRect, kTri, kStar, kFrac };

struct PyramidParams {
  std::size_t n = 1000;
  std::size_t p = 4;
  double h = 5.0;
  // Half-widths of the rectangular base.
  Interval l_vec{3.0, 2.0};
  // Vertex distance of the triangular base.
  double l = 3.0;
  double rt = 0.5;
  double rb = 3.0;
};

Dataset gen_pyramid(PyramidKind kind, const PyramidParams& params,
                    RandomStream& stream);

// Corners of the simplex used by the fractal pyramid: the origin and p * e_i,
// so the hull contains the unit cube where the walk starts.
Matrix fractal_simplex(std::size_t p);

// ---------------------------------------------------------------------------
// Sphere family.

Dataset gen_circle(std::size_t n, std::size_t p, RandomStream& stream);
Dataset gen_curvycycle(std::size_t n, std::size_t p, RandomStream& stream);
Dataset gen_unifsphere(std::size_t n, double r, RandomStream& stream);
Dataset gen_hollowsphere(std::size_t n, std::size_t p, RandomStream& stream);
Dataset gen_gridedsphere(std::size_t n, std::size_t p);

struct ClusteredSpheresParams {
  // Points on the big sphere and on each small sphere.
  std::size_t n_big = 500;
  std::size_t n_small = 100;
  std::size_t k = 3;
  double r_big = 10.0;
  double r_small = 1.0;
  // Standard deviation of the small-sphere centers.
  double spe = 3.0;
  std::size_t p = 3;
};
Dataset gen_clusteredspheres(const ClusteredSpheresParams& params,
                             RandomStream& stream);

Dataset gen_hemisphere(std::size_t n, std::size_t p, RandomStream& stream);

// ---------------------------------------------------------------------------
// Trefoil knots.

// Point on the 3-sphere for band angle theta and knot angle phi.
Eigen::Vector4d trefoil_point(double theta, double phi);

enum class TrefoilKind { k4d, k3d };
Dataset gen_trefoil(TrefoilKind kind, std::size_t n, std::size_t steps,
                    RandomStream& stream);

// ---------------------------------------------------------------------------
// Trigonometric shapes.

Dataset gen_crescent(std::size_t n);
Dataset gen_curvycylinder(std::size_t n, std::size_t p, double h,
                          RandomStream& stream);
Dataset gen_sphericalspiral(std::size_t n, std::size_t p, std::size_t spins,
                            RandomStream& stream);
Dataset gen_helicalspiral(std::size_t n, std::size_t p, RandomStream& stream);
Dataset gen_conicspiral(std::size_t n, std::size_t p, std::size_t spins,
                        RandomStream& stream);
Dataset gen_nonlinear(std::size_t n, std::size_t p, double hc, double non_fac,
                      RandomStream& stream);

// Filler columns for kinds whose formulas define fewer than p coordinates:
// independent N(0, 0.2^2) columns.
Matrix filler_columns(std::size_t n, std::size_t count, RandomStream& stream);

}  // namespace hdshapes
