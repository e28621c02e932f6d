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

#include "hdshapes/core.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "hdshapes/error.hpp"

namespace hdshapes {

void validate(const RotationPlan& plan) {
  require(plan.dim >= 1, ErrorCode::kInvalidPlan,
          "rotation plan dimension must be positive");
  for (const auto& step : plan.steps) {
    require(step.i != step.j, ErrorCode::kInvalidPlan,
            "rotation plane uses the same axis twice (" +
                std::to_string(step.i) + ")");
    require(step.i >= 1 && step.j >= 1 && step.i <= plan.dim &&
                step.j <= plan.dim,
            ErrorCode::kInvalidPlan,
            "rotation axis out of range 1.." + std::to_string(plan.dim));
    require(step.i < step.j, ErrorCode::kInvalidPlan,
            "rotation axes must satisfy i < j");
    require(std::isfinite(step.angle), ErrorCode::kInvalidPlan,
            "rotation angle must be finite");
  }
}

Matrix gen_rotation(const RotationPlan& plan) {
  validate(plan);
  const auto p = static_cast<Eigen::Index>(plan.dim);
  Matrix rotation = Matrix::Identity(p, p);
  for (const auto& step : plan.steps) {
    // Left-multiplying by the plane rotation only mixes rows i and j.
    const auto i = static_cast<Eigen::Index>(step.i - 1);
    const auto j = static_cast<Eigen::Index>(step.j - 1);
    const double c = std::cos(step.angle);
    const double s = std::sin(step.angle);
    const Eigen::RowVectorXd row_i = rotation.row(i);
    const Eigen::RowVectorXd row_j = rotation.row(j);
    rotation.row(i) = c * row_i - s * row_j;
    rotation.row(j) = s * row_i + c * row_j;
  }
  return rotation;
}

Matrix rotate_rows(const Matrix& points, const Matrix& rotation) {
  require(rotation.rows() == points.cols() && rotation.cols() == points.cols(),
          ErrorCode::kShape,
          "rotation is " + std::to_string(rotation.rows()) + "x" +
              std::to_string(rotation.cols()) + " but data has " +
              std::to_string(points.cols()) + " columns");
  return points * rotation.transpose();
}

namespace {

using Wide = unsigned __int128;

// base^k, saturating once it reaches `cap`.
Wide capped_power(std::size_t base, std::size_t k, Wide cap) {
  Wide result = 1;
  for (std::size_t i = 0; i < k && result < cap; ++i) result *= base;
  return result;
}

}  // namespace

std::vector<std::size_t> gen_nproduct(std::size_t target, std::size_t k) {
  require(target >= 1 && k >= 1, ErrorCode::kInfeasible,
          "gen_nproduct needs target >= 1 and k >= 1");
  const Wide goal = target;
  auto base = static_cast<std::size_t>(
      std::floor(std::pow(static_cast<double>(target), 1.0 / k)));
  base = std::max<std::size_t>(base, 1);
  while (base > 1 && capped_power(base - 1, k, goal) >= goal) --base;
  while (capped_power(base, k, goal) < goal) ++base;

  std::vector<std::size_t> factors(k, base);
  if (base == 1) return factors;
  Wide product = capped_power(base, k, ~Wide{0} / base);
  for (std::size_t idx = k; idx-- > 0;) {
    const Wide reduced = product / base * (base - 1);
    if (reduced < goal) break;
    factors[idx] = base - 1;
    product = reduced;
  }
  return factors;
}

std::vector<std::size_t> gen_nsum(std::size_t target, std::size_t k) {
  require(k >= 1 && target >= k, ErrorCode::kInfeasible,
          "gen_nsum cannot split " + std::to_string(target) + " into " +
              std::to_string(k) + " positive parts");
  std::vector<std::size_t> parts(k, target / k);
  for (std::size_t i = 0; i < target % k; ++i) ++parts[i];
  return parts;
}

Dataset normalize_data(const Dataset& ds) {
  require(!ds.empty(), ErrorCode::kEmptyInput, "cannot normalize empty data");
  Matrix out = ds.points();
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    const double lo = out.col(j).minCoeff();
    const double hi = out.col(j).maxCoeff();
    if (hi > lo) {
      out.col(j) = (out.col(j).array() - lo) / (hi - lo);
    } else {
      out.col(j).setZero();
    }
  }
  return Dataset(std::move(out), ds.labels());
}

Dataset randomize_rows(const Dataset& ds, RandomStream& stream) {
  return ds.select_rows(stream.permutation(ds.rows()));
}

Dataset relocate_clusters(const Dataset& ds, const Matrix& loc) {
  require(ds.has_labels(), ErrorCode::kShape,
          "relocate_clusters needs labeled data");
  const auto names = ds.distinct_labels();
  require(static_cast<Eigen::Index>(names.size()) == loc.rows(),
          ErrorCode::kShape,
          "data has " + std::to_string(names.size()) +
              " clusters but loc has " + std::to_string(loc.rows()) + " rows");
  require(loc.cols() == static_cast<Eigen::Index>(ds.cols()), ErrorCode::kShape,
          "loc column count must match data dimension");

  std::map<std::string, Eigen::Index> index;
  for (std::size_t c = 0; c < names.size(); ++c) {
    index[names[c]] = static_cast<Eigen::Index>(c);
  }
  const auto k = loc.rows();
  Matrix sums = Matrix::Zero(k, loc.cols());
  Vector counts = Vector::Zero(k);
  const auto& labels = *ds.labels();
  for (std::size_t r = 0; r < labels.size(); ++r) {
    const auto c = index[labels[r]];
    sums.row(c) += ds.points().row(static_cast<Eigen::Index>(r));
    counts(c) += 1.0;
  }
  Matrix shift(k, loc.cols());
  for (Eigen::Index c = 0; c < k; ++c) {
    shift.row(c) = loc.row(c) - sums.row(c) / counts(c);
  }
  Matrix out = ds.points();
  for (std::size_t r = 0; r < labels.size(); ++r) {
    out.row(static_cast<Eigen::Index>(r)) += shift.row(index[labels[r]]);
  }
  return Dataset(std::move(out), ds.labels());
}

Dataset gen_bkgnoise(std::size_t n, std::size_t p, const Vector& mean,
                     const Vector& sd, RandomStream& stream) {
  require(n >= 1 && p >= 1, ErrorCode::kParameter,
          "background noise needs n >= 1 and p >= 1");
  require(static_cast<std::size_t>(mean.size()) == p &&
              static_cast<std::size_t>(sd.size()) == p,
          ErrorCode::kShape, "mean and sd must have length p");
  for (Eigen::Index j = 0; j < sd.size(); ++j) {
    require(sd(j) > 0.0, ErrorCode::kParameter,
            "background noise sd must be positive");
  }
  Matrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    RandomStream column = stream.derive(static_cast<std::uint64_t>(j));
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      out(i, j) = column.normal(mean(j), sd(j));
    }
  }
  return Dataset(std::move(out));
}

}  // namespace hdshapes
