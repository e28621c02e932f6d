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
#include "hdshapes/noise.hpp"
#include "hdshapes/shapes.hpp"

namespace hdshapes {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Index rows_of(std::size_t n) { return static_cast<Eigen::Index>(n); }

}  // namespace

Matrix filler_columns(std::size_t n, std::size_t count, RandomStream& stream) {
  if (count == 0) return Matrix(rows_of(n), 0);
  return gen_noisedims(n, count, stream).points();
}

Dataset gen_cone(std::size_t n, std::size_t p, double h, double ratio,
                 RandomStream& stream) {
  require(p >= 3, ErrorCode::kDimension, "cone needs p >= 3");
  require(h > 0.0, ErrorCode::kParameter, "cone height h must be positive");
  require(ratio >= 0.0 && ratio <= 1.0, ErrorCode::kParameter,
          "cone ratio must lie in [0, 1]");
  const double rate = 2.0 / h;
  // Inverse CDF of Exp(rate) conditioned on [0, h].
  const double mass = -std::expm1(-rate * h);
  const auto radial = static_cast<Eigen::Index>(p - 1);
  Matrix out(rows_of(n), static_cast<Eigen::Index>(p));
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double height = -std::log1p(-stream.uniform() * mass) / rate;
    const double radius = ratio + (1.0 - ratio) * height / h;
    Vector direction(radial);
    double norm = 0.0;
    do {
      for (Eigen::Index j = 0; j < radial; ++j) direction(j) = stream.normal();
      norm = direction.norm();
    } while (norm == 0.0);
    out.row(i).head(radial) = (radius / norm) * direction.transpose();
    out(i, radial) = height;
  }
  return Dataset(std::move(out));
}

Dataset gen_cube(CubeKind kind, std::size_t n, std::size_t p,
                 RandomStream& stream) {
  require(n >= 1 && p >= 1, ErrorCode::kParameter, "cube needs n, p >= 1");
  if (kind == CubeKind::kGrid) {
    const auto levels = gen_nproduct(n, p);
    std::size_t total = 1;
    for (auto level : levels) total *= level;
    Matrix out(rows_of(total), static_cast<Eigen::Index>(p));
    for (std::size_t row = 0; row < total; ++row) {
      // First axis varies fastest.
      std::size_t rest = row;
      for (std::size_t j = 0; j < p; ++j) {
        const std::size_t step = rest % levels[j];
        rest /= levels[j];
        out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j)) =
            levels[j] > 1 ? static_cast<double>(step) /
                                static_cast<double>(levels[j] - 1)
                          : 0.0;
      }
    }
    return Dataset(std::move(out));
  }

  Matrix out(rows_of(n), static_cast<Eigen::Index>(p));
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    bool vertex = true;
    while (vertex) {
      vertex = true;
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        const double u = stream.uniform();
        out(i, j) = u;
        vertex = vertex && (u == 0.0 || u == 1.0);
      }
    }
  }
  return Dataset(std::move(out));
}

Dataset gen_gaussian(std::size_t n, std::size_t p, const Matrix& covariance,
                     RandomStream& stream) {
  require(p >= 1, ErrorCode::kDimension, "gaussian needs p >= 1");
  const auto dim = static_cast<Eigen::Index>(p);
  Matrix factor = Matrix::Identity(dim, dim);
  if (covariance.size() != 0) {
    require(covariance.rows() == dim && covariance.cols() == dim,
            ErrorCode::kShape,
            "covariance must be " + std::to_string(p) + "x" +
                std::to_string(p));
    require(covariance.allFinite(), ErrorCode::kParameter,
            "covariance has non-finite entries");
    const double scale = std::max(1.0, covariance.cwiseAbs().maxCoeff());
    require((covariance - covariance.transpose()).cwiseAbs().maxCoeff() <=
                1e-12 * scale,
            ErrorCode::kParameter, "covariance must be symmetric");
    Eigen::LLT<Matrix> llt(covariance);
    require(llt.info() == Eigen::Success, ErrorCode::kParameter,
            "covariance must be positive definite");
    factor = llt.matrixL();
  }
  Matrix z(rows_of(n), dim);
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) z(i, j) = stream.normal();
  }
  return Dataset(z * factor.transpose());
}

LongLinear gen_longlinear(std::size_t n, std::size_t p, RandomStream& stream) {
  require(p >= 1, ErrorCode::kDimension, "longlinear needs p >= 1");
  const auto dim = static_cast<Eigen::Index>(p);
  LongLinear result{Dataset(), Vector(dim), Vector(dim)};
  RandomStream coefficients = stream.derive(0);
  for (Eigen::Index j = 0; j < dim; ++j) {
    result.scales(j) = coefficients.uniform(-10.0, 10.0);
    result.shifts(j) = coefficients.uniform(-300.0, 300.0);
  }
  const double noise_sd = 0.03 * static_cast<double>(n);
  RandomStream noise = stream.derive(1);
  Matrix out(rows_of(n), dim);
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const auto t = static_cast<double>(i);
    for (Eigen::Index j = 0; j < dim; ++j) {
      out(i, j) = result.scales(j) *
                  (t + result.shifts(j) + noise.normal(0.0, noise_sd));
    }
  }
  result.data = Dataset(std::move(out));
  return result;
}

Dataset gen_mobius(std::size_t n, RandomStream& stream) {
  Matrix out(rows_of(n), 3);
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double t = stream.uniform(0.0, 2.0 * kPi);
    const double half_width = 0.5 * stream.uniform(-1.0, 1.0);
    const double radius = 1.0 + half_width * std::cos(t / 2.0);
    out(i, 0) = radius * std::cos(t);
    out(i, 1) = radius * std::sin(t);
    out(i, 2) = half_width * std::sin(t / 2.0);
  }
  return Dataset(std::move(out));
}

Dataset gen_polynomial(PolynomialKind kind, std::size_t n, Interval range,
                       RandomStream& stream) {
  require(range.first < range.second, ErrorCode::kParameter,
          "polynomial range needs a < b");
  Matrix out(rows_of(n), 2);
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double x = stream.uniform(range.first, range.second);
    const double noise = stream.uniform(0.0, 0.5);
    const double curve = kind == PolynomialKind::kQuadratic
                             ? x - x * x
                             : x + x * x - x * x * x;
    out(i, 0) = x;
    out(i, 1) = curve + noise;
  }
  return Dataset(std::move(out));
}

Dataset gen_scurve(std::size_t n, RandomStream& stream) {
  Matrix out(rows_of(n), 3);
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double theta = stream.uniform(-1.5 * kPi, 1.5 * kPi);
    const double sign = theta > 0.0 ? 1.0 : (theta < 0.0 ? -1.0 : 0.0);
    out(i, 0) = std::sin(theta);
    out(i, 1) = stream.uniform(0.0, 2.0);
    out(i, 2) = sign * (std::cos(theta) - 1.0);
  }
  return Dataset(std::move(out));
}

Dataset gen_swissroll(std::size_t n, Interval w, RandomStream& stream) {
  require(w.first < w.second, ErrorCode::kParameter,
          "swissroll needs w1 < w2");
  Matrix out(rows_of(n), 3);
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double t = stream.uniform(0.0, 3.0 * kPi);
    out(i, 0) = t * std::cos(t);
    out(i, 1) = t * std::sin(t);
    out(i, 2) = stream.uniform(w.first, w.second);
  }
  return Dataset(std::move(out));
}

}  // namespace hdshapes
