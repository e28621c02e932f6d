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
#include <utility>

#include "hdshapes/error.hpp"
#include "hdshapes/shapes.hpp"

namespace hdshapes {

namespace {

constexpr double kPi = std::numbers::pi;

// Evenly spaced value i of n over [a, b]; a single point sits at a.
double spaced(double a, double b, std::size_t i, std::size_t n) {
  if (n <= 1) return a;
  return a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
}

// Places a 4-column core in front of p - 4 filler columns.
Dataset pad_core(Matrix core, std::size_t p, RandomStream& stream) {
  require(p >= 4, ErrorCode::kDimension, "shape needs p >= 4");
  const auto n = static_cast<std::size_t>(core.rows());
  RandomStream filler = stream.derive(1);
  Matrix extra = filler_columns(n, p - 4, filler);
  Matrix out(core.rows(), static_cast<Eigen::Index>(p));
  out.leftCols(4) = core;
  out.rightCols(extra.cols()) = extra;
  return Dataset(std::move(out));
}

}  // namespace

Dataset gen_crescent(std::size_t n) {
  Matrix out(static_cast<Eigen::Index>(n), 2);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = spaced(kPi / 6.0, 2.0 * kPi, i, n);
    out(static_cast<Eigen::Index>(i), 0) = std::cos(theta);
    out(static_cast<Eigen::Index>(i), 1) = std::sin(theta);
  }
  return Dataset(std::move(out));
}

Dataset gen_curvycylinder(std::size_t n, std::size_t p, double h,
                          RandomStream& stream) {
  require(h > 0.0, ErrorCode::kParameter, "curvycylinder height must be positive");
  require(p >= 4, ErrorCode::kDimension, "curvycylinder needs p >= 4");
  RandomStream rng = stream.derive(0);
  Matrix core(static_cast<Eigen::Index>(n), 4);
  for (Eigen::Index i = 0; i < core.rows(); ++i) {
    const double theta = rng.uniform(0.0, 3.0 * kPi);
    const double z = rng.uniform(0.0, h);
    core(i, 0) = std::cos(theta);
    core(i, 1) = std::sin(theta);
    core(i, 2) = z;
    core(i, 3) = std::sin(z);
  }
  return pad_core(std::move(core), p, stream);
}

Dataset gen_sphericalspiral(std::size_t n, std::size_t p, std::size_t spins,
                            RandomStream& stream) {
  require(spins >= 1, ErrorCode::kParameter, "sphericalspiral needs spins >= 1");
  require(p >= 4, ErrorCode::kDimension, "sphericalspiral needs p >= 4");
  RandomStream rng = stream.derive(0);
  const double theta_max = 2.0 * kPi * static_cast<double>(spins);
  const double last_theta = n > 1 ? theta_max : 0.0;
  Matrix core(static_cast<Eigen::Index>(n), 4);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    const double theta = spaced(0.0, theta_max, i, n);
    const double phi = spaced(0.0, kPi, i, n);
    core(r, 0) = std::sin(phi) * std::cos(theta);
    core(r, 1) = std::sin(phi) * std::sin(theta);
    core(r, 2) = std::cos(phi) + rng.uniform(-0.5, 0.5);
    core(r, 3) = last_theta > 0.0 ? theta / last_theta : 0.0;
  }
  return pad_core(std::move(core), p, stream);
}

Dataset gen_helicalspiral(std::size_t n, std::size_t p, RandomStream& stream) {
  require(p >= 4, ErrorCode::kDimension, "helicalspiral needs p >= 4");
  RandomStream rng = stream.derive(0);
  Matrix core(static_cast<Eigen::Index>(n), 4);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    const double theta = spaced(0.0, 5.0 * kPi / 4.0, i, n);
    core(r, 0) = std::cos(theta);
    core(r, 1) = std::sin(theta);
    core(r, 2) = 0.05 * theta + rng.uniform(-0.5, 0.5);
    core(r, 3) = 0.1 * std::sin(theta);
  }
  return pad_core(std::move(core), p, stream);
}

Dataset gen_conicspiral(std::size_t n, std::size_t p, std::size_t spins,
                        RandomStream& stream) {
  require(spins >= 1, ErrorCode::kParameter, "conicspiral needs spins >= 1");
  require(p >= 4, ErrorCode::kDimension, "conicspiral needs p >= 4");
  RandomStream rng = stream.derive(0);
  const double theta_max = 2.0 * kPi * static_cast<double>(spins);
  const double last_theta = n > 1 ? theta_max : 0.0;
  Matrix core(static_cast<Eigen::Index>(n), 4);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    const double theta = spaced(0.0, theta_max, i, n);
    core(r, 0) = theta * std::cos(theta);
    core(r, 1) = theta * std::sin(theta);
    core(r, 2) = (last_theta > 0.0 ? 2.0 * theta / last_theta : 0.0) +
                 rng.uniform(-0.1, 0.6);
    core(r, 3) = theta * std::sin(2.0 * theta) + rng.uniform(-0.1, 0.6);
  }
  return pad_core(std::move(core), p, stream);
}

Dataset gen_nonlinear(std::size_t n, std::size_t p, double hc, double non_fac,
                      RandomStream& stream) {
  require(std::isfinite(hc) && std::isfinite(non_fac), ErrorCode::kParameter,
          "nonlinear hc and non_fac must be finite");
  require(p >= 4, ErrorCode::kDimension, "nonlinear needs p >= 4");
  RandomStream rng = stream.derive(0);
  Matrix core(static_cast<Eigen::Index>(n), 4);
  for (Eigen::Index i = 0; i < core.rows(); ++i) {
    const double x1 = rng.uniform(0.1, 2.0);
    core(i, 0) = x1;
    core(i, 1) = hc / x1 + non_fac * std::sin(x1);
    core(i, 2) = rng.uniform(0.1, 0.8);
    core(i, 3) = std::cos(kPi * x1) + rng.uniform(-0.1, 0.1);
  }
  return pad_core(std::move(core), p, stream);
}

}  // namespace hdshapes
