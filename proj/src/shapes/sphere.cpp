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

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "hdshapes/core.hpp"
#include "hdshapes/error.hpp"
#include "hdshapes/shapes.hpp"

namespace hdshapes {

namespace {

constexpr double kPi = std::numbers::pi;

// Uniform point on the unit (dim-1)-sphere.
Eigen::RowVectorXd unit_direction(Eigen::Index dim, RandomStream& stream) {
  Eigen::RowVectorXd v(dim);
  double norm = 0.0;
  do {
    for (Eigen::Index j = 0; j < dim; ++j) v(j) = stream.normal();
    norm = v.norm();
  } while (norm == 0.0);
  return v / norm;
}

}  // namespace

Dataset gen_circle(std::size_t n, std::size_t p, RandomStream& stream) {
  require(p >= 2, ErrorCode::kDimension, "circle needs p >= 2");
  const auto dim = static_cast<Eigen::Index>(p);
  Matrix out(static_cast<Eigen::Index>(n), dim);
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double theta = stream.uniform(0.0, 2.0 * kPi);
    out(i, 0) = std::cos(theta);
    out(i, 1) = std::sin(theta);
    for (Eigen::Index c = 2; c < dim; ++c) {
      const double j = static_cast<double>(c + 1);
      const double amplitude = std::sqrt(std::pow(0.5, j - 2.0));
      const double phase = (j - 2.0) * kPi / (2.0 * static_cast<double>(p));
      out(i, c) = amplitude * std::sin(theta + phase);
    }
  }
  return Dataset(std::move(out));
}

Dataset gen_curvycycle(std::size_t n, std::size_t p, RandomStream& stream) {
  require(p >= 3, ErrorCode::kDimension, "curvycycle needs p >= 3");
  const auto dim = static_cast<Eigen::Index>(p);
  Matrix out(static_cast<Eigen::Index>(n), dim);
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double theta = stream.uniform(0.0, 2.0 * kPi);
    out(i, 0) = std::cos(theta);
    out(i, 1) = std::sqrt(3.0) / 3.0 + std::sin(theta);
    out(i, 2) = std::cos(3.0 * theta) / 3.0;
    for (Eigen::Index c = 3; c < dim; ++c) {
      const double j = static_cast<double>(c + 1);
      const double amplitude = std::sqrt(std::pow(0.5, j - 3.0));
      const double phase = (j - 2.0) * kPi / (2.0 * static_cast<double>(p));
      out(i, c) = amplitude * std::sin(theta + phase);
    }
  }
  return Dataset(std::move(out));
}

Dataset gen_unifsphere(std::size_t n, double r, RandomStream& stream) {
  require(r > 0.0, ErrorCode::kParameter, "unifsphere radius must be positive");
  Matrix out(static_cast<Eigen::Index>(n), 3);
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double u = stream.uniform(-1.0, 1.0);
    const double theta = stream.uniform(0.0, 2.0 * kPi);
    const double ring = r * std::sqrt(1.0 - u * u);
    out(i, 0) = ring * std::cos(theta);
    out(i, 1) = ring * std::sin(theta);
    out(i, 2) = r * u;
  }
  return Dataset(std::move(out));
}

Dataset gen_hollowsphere(std::size_t n, std::size_t p, RandomStream& stream) {
  require(p >= 2, ErrorCode::kDimension, "hollowsphere needs p >= 2");
  const auto dim = static_cast<Eigen::Index>(p);
  Matrix out(static_cast<Eigen::Index>(n), dim);
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    out.row(i) = unit_direction(dim, stream);
  }
  return Dataset(std::move(out));
}

Dataset gen_gridedsphere(std::size_t n, std::size_t p) {
  require(p >= 2, ErrorCode::kDimension, "gridedsphere needs p >= 2");
  const std::size_t angles = p - 1;
  const auto levels = gen_nproduct(n, angles);
  std::size_t total = 1;
  for (auto level : levels) total *= level;

  // Polar angles include both ends of [0, pi]; the azimuth covers [0, 2 pi)
  // so the seam is not duplicated.
  auto angle_at = [&](std::size_t a, std::size_t step) {
    const auto count = static_cast<double>(levels[a]);
    if (a + 1 == angles) return 2.0 * kPi * static_cast<double>(step) / count;
    if (levels[a] == 1) return kPi / 2.0;
    return kPi * static_cast<double>(step) / (count - 1.0);
  };

  const auto dim = static_cast<Eigen::Index>(p);
  Matrix out(static_cast<Eigen::Index>(total), dim);
  for (std::size_t row = 0; row < total; ++row) {
    std::size_t rest = row;
    double sines = 1.0;
    const auto r = static_cast<Eigen::Index>(row);
    for (std::size_t a = 0; a < angles; ++a) {
      const double theta = angle_at(a, rest % levels[a]);
      rest /= levels[a];
      out(r, static_cast<Eigen::Index>(a)) = sines * std::cos(theta);
      sines *= std::sin(theta);
    }
    out(r, dim - 1) = sines;
  }
  return Dataset(std::move(out));
}

Dataset gen_clusteredspheres(const ClusteredSpheresParams& params,
                             RandomStream& stream) {
  require(params.p >= 2, ErrorCode::kDimension,
          "clusteredspheres needs p >= 2");
  require(params.k >= 1, ErrorCode::kParameter,
          "clusteredspheres needs at least one small sphere");
  require(params.n_big >= 1 && params.n_small >= 1, ErrorCode::kParameter,
          "clusteredspheres sphere sizes must be positive");
  require(params.r_big > 0.0 && params.r_small > 0.0, ErrorCode::kParameter,
          "clusteredspheres radii must be positive");
  require(params.spe > 0.0, ErrorCode::kParameter,
          "clusteredspheres spe must be positive");
  const auto dim = static_cast<Eigen::Index>(params.p);
  const std::size_t total = params.n_big + params.k * params.n_small;
  Matrix out(static_cast<Eigen::Index>(total), dim);
  Labels labels;
  labels.reserve(total);

  RandomStream big = stream.derive(0);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < params.n_big; ++i, ++row) {
    out.row(row) = params.r_big * unit_direction(dim, big);
  }
  labels.insert(labels.end(), params.n_big, "big");

  RandomStream centers = stream.derive(1);
  for (std::size_t c = 0; c < params.k; ++c) {
    Eigen::RowVectorXd center(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      center(j) = centers.normal(0.0, params.spe);
    }
    RandomStream small = stream.derive(c + 2);
    for (std::size_t i = 0; i < params.n_small; ++i, ++row) {
      out.row(row) = center + params.r_small * unit_direction(dim, small);
    }
    labels.insert(labels.end(), params.n_small,
                  "small_" + std::to_string(c + 1));
  }
  return Dataset(std::move(out), std::move(labels));
}

Dataset gen_hemisphere(std::size_t n, std::size_t p, RandomStream& stream) {
  require(p >= 4, ErrorCode::kDimension, "hemisphere needs p >= 4");
  RandomStream rng = stream.derive(0);
  Matrix core(static_cast<Eigen::Index>(n), 4);
  for (Eigen::Index i = 0; i < core.rows(); ++i) {
    const double t1 = rng.uniform(0.0, kPi);
    const double t2 = rng.uniform(0.0, kPi);
    const double t3 = rng.uniform(0.0, kPi / 2.0);
    core(i, 0) = std::sin(t1) * std::cos(t2);
    core(i, 1) = std::sin(t1) * std::sin(t2);
    core(i, 2) = std::cos(t1) * std::cos(t3);
    core(i, 3) = std::cos(t1) * std::sin(t3);
  }
  RandomStream filler = stream.derive(1);
  Matrix extra = filler_columns(n, p - 4, filler);
  Matrix out(core.rows(), static_cast<Eigen::Index>(p));
  out.leftCols(4) = core;
  out.rightCols(extra.cols()) = extra;
  return Dataset(std::move(out));
}

}  // namespace hdshapes
