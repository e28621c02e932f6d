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
#include <numbers>
#include <utility>
#include <vector>

#include "hdshapes/core.hpp"
#include "hdshapes/error.hpp"
#include "hdshapes/shapes.hpp"

namespace hdshapes {

namespace {

constexpr double kPi = std::numbers::pi;
// Band of knot copies around the Clifford torus (theta = pi / 4).
constexpr double kBandCenter = kPi / 4.0;
constexpr double kBandHalfWidth = 0.15;

Matrix trefoil_4d(std::size_t n, std::size_t steps) {
  const std::size_t bands = std::min(steps, n);
  const auto counts = gen_nsum(n, bands);
  Matrix out(static_cast<Eigen::Index>(n), 4);
  Eigen::Index row = 0;
  for (std::size_t b = 0; b < bands; ++b) {
    const double theta =
        bands == 1 ? kBandCenter
                   : kBandCenter - kBandHalfWidth +
                         2.0 * kBandHalfWidth * static_cast<double>(b) /
                             static_cast<double>(bands - 1);
    const auto m = static_cast<double>(counts[b]);
    for (std::size_t j = 0; j < counts[b]; ++j, ++row) {
      const double phi = 4.0 * kPi * static_cast<double>(j) / m;
      out.row(row) = trefoil_point(theta, phi).transpose();
    }
  }
  return out;
}

}  // namespace

Eigen::Vector4d trefoil_point(double theta, double phi) {
  return {std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi),
          std::sin(theta) * std::cos(1.5 * phi),
          std::sin(theta) * std::sin(1.5 * phi)};
}

// The knot is a deterministic grid: `steps` band angles, with the n points
// split evenly across them. The stream is accepted for interface symmetry.
Dataset gen_trefoil(TrefoilKind kind, std::size_t n, std::size_t steps,
                    RandomStream& /*stream*/) {
  require(n >= 1, ErrorCode::kParameter, "trefoil needs n >= 1");
  require(steps >= 1, ErrorCode::kParameter, "trefoil needs steps >= 1");
  Matrix four = trefoil_4d(n, steps);
  if (kind == TrefoilKind::k4d) return Dataset(std::move(four));

  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < four.rows(); ++i) {
    if (four(i, 3) < 1.0) keep.push_back(i);
  }
  Matrix out(static_cast<Eigen::Index>(keep.size()), 3);
  for (std::size_t r = 0; r < keep.size(); ++r) {
    const auto i = keep[r];
    const double denom = 1.0 - four(i, 3);
    for (Eigen::Index j = 0; j < 3; ++j) {
      out(static_cast<Eigen::Index>(r), j) = four(i, j) / denom;
    }
  }
  return Dataset(std::move(out));
}

}  // namespace hdshapes
