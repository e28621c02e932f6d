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
#include <string>
#include <utility>

#include "hdshapes/error.hpp"
#include "hdshapes/shapes.hpp"

namespace hdshapes {

namespace {

// Exp(2/h) clamped at h.
double clamped_height(double h, RandomStream& stream) {
  return std::min(stream.exponential(2.0 / h), h);
}

Dataset with_fillers(Matrix core, std::size_t first_filler, std::size_t p,
                     const Vector& heights, RandomStream& stream) {
  const auto n = static_cast<std::size_t>(core.rows());
  Matrix out(core.rows(), static_cast<Eigen::Index>(p));
  const auto filled = static_cast<Eigen::Index>(first_filler);
  out.leftCols(filled) = core.leftCols(filled);
  const std::size_t fillers = p - 1 - first_filler;
  RandomStream filler_stream = stream.derive(1);
  out.middleCols(filled, static_cast<Eigen::Index>(fillers)) =
      filler_columns(n, fillers, filler_stream);
  out.col(static_cast<Eigen::Index>(p - 1)) = heights;
  return Dataset(std::move(out));
}

Dataset pyramid_rect(const PyramidParams& params, RandomStream& stream) {
  const auto [lx, ly] = params.l_vec;
  require(lx > 0.0 && ly > 0.0, ErrorCode::kParameter,
          "pyrrect base half-widths must be positive");
  require(params.rt <= lx && params.rt <= ly, ErrorCode::kParameter,
          "pyrrect tip radius rt exceeds the base half-width");
  RandomStream rng = stream.derive(0);
  const auto n = static_cast<Eigen::Index>(params.n);
  Matrix core(n, 3);
  Vector heights(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double z = clamped_height(params.h, rng);
    const double rx = params.rt + (lx - params.rt) * z / params.h;
    const double ry = params.rt + (ly - params.rt) * z / params.h;
    core(i, 0) = rng.uniform(-rx, rx);
    core(i, 1) = rng.uniform(-ry, ry);
    core(i, 2) = rng.uniform(-rx, rx);
    heights(i) = z;
  }
  return with_fillers(std::move(core), 3, params.p, heights, stream);
}

Dataset pyramid_tri(const PyramidParams& params, RandomStream& stream) {
  require(params.l > 0.0, ErrorCode::kParameter,
          "pyrtri base length l must be positive");
  require(params.rt <= params.l, ErrorCode::kParameter,
          "pyrtri tip radius rt exceeds the base length l");
  RandomStream rng = stream.derive(0);
  const auto n = static_cast<Eigen::Index>(params.n);
  Matrix core(n, 3);
  Vector heights(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double z = clamped_height(params.h, rng);
    const double scale = params.rt + (params.l - params.rt) * z / params.h;
    double u = rng.uniform();
    double v = rng.uniform();
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    core(i, 0) = scale * (1.0 - u - v);
    core(i, 1) = scale * u;
    core(i, 2) = scale * v;
    heights(i) = z;
  }
  return with_fillers(std::move(core), 3, params.p, heights, stream);
}

Dataset pyramid_star(const PyramidParams& params, RandomStream& stream) {
  require(params.rb > 0.0, ErrorCode::kParameter,
          "pyrstar base radius rb must be positive");
  RandomStream rng = stream.derive(0);
  const auto n = static_cast<Eigen::Index>(params.n);
  Matrix core(n, 2);
  Vector heights(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double z = rng.uniform(0.0, params.h);
    const double scale = params.rb * (1.0 - z / params.h);
    const double theta =
        static_cast<double>(rng.below(6)) * std::numbers::pi / 3.0;
    const double spread = std::sqrt(rng.uniform());
    core(i, 0) = scale * spread * std::cos(theta);
    core(i, 1) = scale * spread * std::sin(theta);
    heights(i) = z;
  }
  return with_fillers(std::move(core), 2, params.p, heights, stream);
}

Dataset pyramid_frac(const PyramidParams& params, RandomStream& stream) {
  const Matrix corners = fractal_simplex(params.p);
  const auto dim = static_cast<Eigen::Index>(params.p);
  Eigen::RowVectorXd current(dim);
  for (Eigen::Index j = 0; j < dim; ++j) current(j) = stream.uniform();
  Matrix out(static_cast<Eigen::Index>(params.n), dim);
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const auto corner = static_cast<Eigen::Index>(
        stream.below(static_cast<std::uint64_t>(corners.rows())));
    current = 0.5 * (current + corners.row(corner));
    out.row(i) = current;
  }
  return Dataset(std::move(out));
}

}  // namespace

Matrix fractal_simplex(std::size_t p) {
  const auto dim = static_cast<Eigen::Index>(p);
  Matrix corners = Matrix::Zero(dim + 1, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    corners(j + 1, j) = static_cast<double>(p);
  }
  return corners;
}

Dataset gen_pyramid(PyramidKind kind, const PyramidParams& params,
                    RandomStream& stream) {
  require(params.h > 0.0, ErrorCode::kParameter,
          "pyramid height h must be positive");
  require(params.rt >= 0.0, ErrorCode::kParameter,
          "pyramid tip radius rt must be non-negative");
  switch (kind) {
    case PyramidKind::kRect:
      require(params.p >= 4, ErrorCode::kDimension, "pyrrect needs p >= 4");
      return pyramid_rect(params, stream);
    case PyramidKind::kTri:
      require(params.p >= 4, ErrorCode::kDimension, "pyrtri needs p >= 4");
      return pyramid_tri(params, stream);
    case PyramidKind::kStar:
      require(params.p >= 3, ErrorCode::kDimension, "pyrstar needs p >= 3");
      return pyramid_star(params, stream);
    case PyramidKind::kFrac:
      require(params.p >= 2, ErrorCode::kDimension, "pyrfrac needs p >= 2");
      return pyramid_frac(params, stream);
  }
  fail(ErrorCode::kParameter, "unknown pyramid kind");
}

}  // namespace hdshapes
