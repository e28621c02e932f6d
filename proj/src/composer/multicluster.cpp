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
#include <map>
#include <string>
#include <utility>

#include "hdshapes/composer.hpp"
#include "hdshapes/error.hpp"

namespace hdshapes {

namespace {

std::string count_mismatch(const char* field, std::size_t got, std::size_t k) {
  return std::string(field) + " has " + std::to_string(got) +
         " entries but k = " + std::to_string(k);
}

}  // namespace

void validate(const MultiClusterSpec& spec) {
  const std::size_t k = spec.k;
  require(k >= 1, ErrorCode::kShape, "k must be >= 1");
  require(spec.n.size() == k, ErrorCode::kShape,
          count_mismatch("n", spec.n.size(), k));
  require(spec.scale.size() == k, ErrorCode::kShape,
          count_mismatch("scale", spec.scale.size(), k));
  require(spec.shape.size() == k, ErrorCode::kShape,
          count_mismatch("shape", spec.shape.size(), k));
  require(static_cast<std::size_t>(spec.loc.rows()) == k, ErrorCode::kShape,
          count_mismatch("loc", static_cast<std::size_t>(spec.loc.rows()), k));
  require(spec.loc.cols() >= 1, ErrorCode::kShape, "loc needs at least one column");
  require(spec.loc.allFinite(), ErrorCode::kParameter, "loc must be finite");
  require(spec.rotation.empty() || spec.rotation.size() == k, ErrorCode::kShape,
          count_mismatch("rotation", spec.rotation.size(), k));
  require(spec.extras.empty() || spec.extras.size() == k, ErrorCode::kShape,
          count_mismatch("extras", spec.extras.size(), k));

  const auto p = static_cast<std::size_t>(spec.loc.cols());
  for (std::size_t c = 0; c < k; ++c) {
    const std::string where = "cluster " + std::to_string(c + 1) + ": ";
    require(spec.n[c] >= 1, ErrorCode::kShape, where + "n must be >= 1");
    require(spec.scale[c] > 0.0 && std::isfinite(spec.scale[c]),
            ErrorCode::kShape, where + "scale must be positive");
    const auto& info = find_shape(spec.shape[c]);
    if (!spec.extras.empty()) {
      require(!spec.extras[c].n.has_value(), ErrorCode::kRejectedParameter,
              where + "n is set by the cluster size vector, not by extras");
    }
    const ShapeParams params = cluster_params(spec, c);
    validate_params(info, params);
    const std::size_t dim = output_dim(info, params);
    require(dim <= p, ErrorCode::kDimension,
            where + spec.shape[c] + " produces " + std::to_string(dim) +
                " columns but loc has only " + std::to_string(p));
  }
}

std::vector<std::string> cluster_labels(const std::vector<std::string>& shapes) {
  std::map<std::string, std::size_t> total;
  for (const auto& name : shapes) ++total[name];
  std::map<std::string, std::size_t> seen;
  std::vector<std::string> labels;
  labels.reserve(shapes.size());
  for (const auto& name : shapes) {
    if (total[name] == 1) {
      labels.push_back(name);
    } else {
      labels.push_back(name + "_" + std::to_string(++seen[name]));
    }
  }
  return labels;
}

ShapeParams cluster_params(const MultiClusterSpec& spec, std::size_t c) {
  ShapeParams params = spec.extras.empty() ? ShapeParams{} : spec.extras[c];
  params.n = spec.n[c];
  const auto& info = find_shape(spec.shape[c]);
  if (info.takes_p && !params.p) {
    params.p = static_cast<std::size_t>(spec.loc.cols());
  }
  return params;
}

Matrix realize(const Rotation& rotation) {
  if (const auto* plan = std::get_if<RotationPlan>(&rotation)) {
    return gen_rotation(*plan);
  }
  return std::get<Matrix>(rotation);
}

Dataset apply_transform(const Dataset& ds, double scale,
                        const std::optional<Matrix>& rotation,
                        const std::optional<Vector>& center) {
  require(scale > 0.0 && std::isfinite(scale), ErrorCode::kParameter,
          "scale must be positive");
  Matrix x = scale * ds.points();
  if (rotation) {
    const Matrix& r = *rotation;
    require(r.rows() == r.cols(), ErrorCode::kInvalidRotation,
            "rotation matrix must be square");
    const Matrix gram = r.transpose() * r;
    const double error =
        (gram - Matrix::Identity(r.rows(), r.cols())).cwiseAbs().maxCoeff();
    require(error <= 1e-8, ErrorCode::kInvalidRotation,
            "rotation matrix is not orthogonal");
    x = rotate_rows(x, r);
  }
  if (center) {
    require(center->size() == x.cols(), ErrorCode::kShape,
            "center has the wrong length");
    const Eigen::RowVectorXd shift =
        center->transpose() - x.colwise().mean();
    x.rowwise() += shift;
  }
  return Dataset(std::move(x), ds.labels());
}

Dataset pad_to_dim(const Dataset& ds, std::size_t p_target,
                   RandomStream& stream) {
  require(p_target >= ds.cols(), ErrorCode::kDimension,
          "cannot pad " + std::to_string(ds.cols()) + " columns down to " +
              std::to_string(p_target));
  if (p_target == ds.cols()) return ds;
  require(!ds.empty(), ErrorCode::kEmptyInput, "cannot pad empty data");
  const double mu = ds.points().mean();
  const auto extra = static_cast<Eigen::Index>(p_target - ds.cols());
  Matrix noise(ds.points().rows(), extra);
  for (Eigen::Index j = 0; j < extra; ++j) {
    RandomStream column = stream.derive(static_cast<std::uint64_t>(j));
    for (Eigen::Index i = 0; i < noise.rows(); ++i) {
      noise(i, j) = column.normal(mu, kPaddingSd);
    }
  }
  return append_columns(ds, noise);
}

Dataset gen_multicluster(const MultiClusterSpec& spec, RandomStream& stream) {
  validate(spec);
  const auto p = static_cast<std::size_t>(spec.loc.cols());
  const auto labels = cluster_labels(spec.shape);
  std::vector<Dataset> parts;
  parts.reserve(spec.k);
  for (std::size_t c = 0; c < spec.k; ++c) {
    RandomStream cluster = stream.derive(c);
    RandomStream shape_rng = cluster.derive(0);
    RandomStream pad_rng = cluster.derive(1);
    const Dataset base =
        generate_shape(spec.shape[c], cluster_params(spec, c), shape_rng)
            .without_labels();

    std::optional<Matrix> early;
    std::optional<Matrix> late;
    if (!spec.rotation.empty() && spec.rotation[c]) {
      Matrix r = realize(*spec.rotation[c]);
      const auto dim = static_cast<std::size_t>(r.rows());
      if (dim == base.cols()) {
        early = std::move(r);
      } else if (dim == p) {
        late = std::move(r);
      } else {
        fail(ErrorCode::kShape,
             "cluster " + std::to_string(c + 1) + ": rotation dimension " +
                 std::to_string(dim) + " matches neither the shape (" +
                 std::to_string(base.cols()) + ") nor the scene (" +
                 std::to_string(p) + ")");
      }
    }
    Dataset moved = apply_transform(base, spec.scale[c], early, std::nullopt);
    moved = pad_to_dim(moved, p, pad_rng);
    const Vector center = spec.loc.row(static_cast<Eigen::Index>(c)).transpose();
    moved = apply_transform(moved, 1.0, late, center);
    parts.push_back(moved.with_label(labels[c]));
  }
  Dataset scene = concat_rows(parts);

  if (spec.is_bkg) {
    const auto count = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(
               kBackgroundFraction * static_cast<double>(scene.rows()))));
    RandomStream bkg = stream.derive(spec.k);
    const Dataset noise = gen_bkgnoise(count, p, column_means(scene.points()),
                                       column_sds(scene.points()), bkg);
    scene = concat_rows({scene, noise.with_label(kBackgroundLabel)});
  }
  if (spec.shuffle) {
    RandomStream order = stream.derive(spec.k + 1);
    scene = randomize_rows(scene, order);
  }
  return scene;
}

}  // namespace hdshapes
