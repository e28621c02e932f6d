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

#include "hdshapes/noise.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "hdshapes/error.hpp"

namespace hdshapes {

namespace {

void check_length(const Vector& v, std::size_t n, const char* what) {
  require(static_cast<std::size_t>(v.size()) == n, ErrorCode::kShape,
          std::string(what) + " has length " + std::to_string(v.size()) +
              ", expected " + std::to_string(n));
}

}  // namespace

Dataset gen_noisedims(std::size_t n, std::size_t p, const Vector& mean,
                      const Vector& sd, RandomStream& stream) {
  check_length(mean, p, "mean vector");
  check_length(sd, p, "sd vector");
  for (Eigen::Index j = 0; j < sd.size(); ++j) {
    require(sd(j) > 0.0, ErrorCode::kParameter, "noise sd must be positive");
  }
  Matrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    RandomStream column = stream.derive(static_cast<std::uint64_t>(j));
    // Column j + 1 is odd when j is even.
    const double sign = (j % 2 == 0) ? -1.0 : 1.0;
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      out(i, j) = sign * column.normal(mean(j), sd(j));
    }
  }
  return Dataset(std::move(out));
}

Dataset gen_noisedims(std::size_t n, std::size_t p, RandomStream& stream) {
  const auto size = static_cast<Eigen::Index>(p);
  return gen_noisedims(n, p, Vector::Zero(size),
                       Vector::Constant(size, kDefaultNoiseSd), stream);
}

Dataset gen_wavydims1(std::size_t n, std::size_t p, const Vector& theta,
                      RandomStream& stream, double sigma) {
  check_length(theta, n, "theta");
  require(sigma >= 0.0, ErrorCode::kParameter, "sigma must be non-negative");
  Matrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    RandomStream column = stream.derive(static_cast<std::uint64_t>(j));
    const double slope = wavy1_slope(static_cast<std::size_t>(j) + 1);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      out(i, j) = slope * theta(i) + sigma * column.normal();
    }
  }
  return Dataset(std::move(out));
}

double wavy2_sign(std::size_t j) { return (j / 2) % 2 == 0 ? 1.0 : -1.0; }

WavyDims2 gen_wavydims2(std::size_t n, std::size_t p, const Vector& x1,
                        RandomStream& stream, double noise) {
  check_length(x1, n, "x1");
  require(noise >= 0.0, ErrorCode::kParameter, "noise must be non-negative");
  WavyDims2 result;
  RandomStream coefficients = stream.derive(0);
  Matrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    const int power = 2 + static_cast<int>(coefficients.below(3));
    const double scale = coefficients.uniform(0.5, 1.5);
    result.powers.push_back(power);
    result.scales.push_back(scale);
    const double sign = wavy2_sign(static_cast<std::size_t>(j) + 1);
    RandomStream column = stream.derive(static_cast<std::uint64_t>(j) + 1);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      out(i, j) = scale * sign * std::pow(x1(i), power) +
                  column.uniform(-noise, noise);
    }
  }
  result.data = Dataset(std::move(out));
  return result;
}

double wavy3_form(std::size_t j, double x1, double x2, double x3) {
  switch ((j - 4) % 4) {
    case 0: return x1 * x2;
    case 1: return std::sin(x1) + x3 * x3;
    case 2: return x1 * x1 - x2 * x3;
    default: return std::cos(x2) * x3;
  }
}

Dataset gen_wavydims3(std::size_t n, std::size_t p, const Dataset& base,
                      RandomStream& stream, double noise) {
  require(base.cols() >= 3, ErrorCode::kShape,
          "gen_wavydims3 needs a base with at least 3 columns");
  require(base.rows() == n, ErrorCode::kShape,
          "base has " + std::to_string(base.rows()) + " rows, expected " +
              std::to_string(n));
  require(p >= 3, ErrorCode::kDimension, "gen_wavydims3 needs p >= 3");
  require(noise >= 0.0, ErrorCode::kParameter, "noise must be non-negative");
  const Matrix& x = base.points();
  Matrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    RandomStream column = stream.derive(static_cast<std::uint64_t>(j));
    const auto col = static_cast<std::size_t>(j) + 1;
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      const double clean = col <= 3 ? x(i, j)
                                    : wavy3_form(col, x(i, 0), x(i, 1), x(i, 2));
      out(i, j) = clean + column.uniform(-noise, noise);
    }
  }
  return Dataset(std::move(out));
}

}  // namespace hdshapes
