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

#include "hdshapes/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "hdshapes/error.hpp"

namespace hdshapes {

Dataset::Dataset(Matrix points, std::optional<Labels> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
  require(points_.allFinite(), ErrorCode::kParameter,
          "dataset contains non-finite values");
  if (labels_) {
    require(labels_->size() == rows(), ErrorCode::kShape,
            "label count " + std::to_string(labels_->size()) +
                " does not match row count " + std::to_string(rows()));
  }
}

std::string column_name(std::size_t index) {
  return "x" + std::to_string(index + 1);
}

std::vector<std::string> Dataset::column_names() const {
  std::vector<std::string> names;
  names.reserve(cols());
  for (std::size_t j = 0; j < cols(); ++j) names.push_back(column_name(j));
  return names;
}

std::vector<std::string> Dataset::distinct_labels() const {
  if (!labels_) return {};
  std::set<std::string> unique(labels_->begin(), labels_->end());
  return {unique.begin(), unique.end()};
}

Dataset Dataset::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix out(static_cast<Eigen::Index>(rows.size()), points_.cols());
  std::optional<Labels> out_labels;
  if (labels_) out_labels.emplace().reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) =
        points_.row(static_cast<Eigen::Index>(rows[i]));
    if (labels_) out_labels->push_back((*labels_)[rows[i]]);
  }
  return Dataset(std::move(out), std::move(out_labels));
}

Dataset Dataset::subset(const std::string& label) const {
  std::vector<std::size_t> keep;
  if (labels_) {
    for (std::size_t i = 0; i < labels_->size(); ++i) {
      if ((*labels_)[i] == label) keep.push_back(i);
    }
  }
  return select_rows(keep);
}

Dataset Dataset::with_labels(Labels labels) const {
  return Dataset(points_, std::move(labels));
}

Dataset Dataset::with_label(const std::string& label) const {
  return Dataset(points_, Labels(rows(), label));
}

Dataset Dataset::without_labels() const { return Dataset(points_); }

bool Dataset::operator==(const Dataset& other) const {
  return points_.rows() == other.points_.rows() &&
         points_.cols() == other.points_.cols() &&
         points_ == other.points_ && labels_ == other.labels_;
}

Dataset append_columns(const Dataset& left, const Matrix& right) {
  require(right.cols() == 0 ||
              right.rows() == static_cast<Eigen::Index>(left.rows()),
          ErrorCode::kShape, "appended columns must match the row count");
  Matrix out(left.points().rows(), left.points().cols() + right.cols());
  out.leftCols(left.points().cols()) = left.points();
  out.rightCols(right.cols()) = right;
  return Dataset(std::move(out), left.labels());
}

Dataset concat_rows(const std::vector<Dataset>& parts) {
  if (parts.empty()) return {};
  const auto cols = parts.front().points().cols();
  const bool labeled = parts.front().has_labels();
  Eigen::Index total = 0;
  for (const auto& part : parts) {
    require(part.points().cols() == cols, ErrorCode::kShape,
            "cannot concatenate datasets with different column counts");
    require(part.has_labels() == labeled, ErrorCode::kShape,
            "cannot concatenate labeled and unlabeled datasets");
    total += part.points().rows();
  }
  Matrix out(total, cols);
  std::optional<Labels> labels;
  if (labeled) labels.emplace().reserve(static_cast<std::size_t>(total));
  Eigen::Index offset = 0;
  for (const auto& part : parts) {
    out.middleRows(offset, part.points().rows()) = part.points();
    offset += part.points().rows();
    if (labeled) {
      labels->insert(labels->end(), part.labels()->begin(),
                     part.labels()->end());
    }
  }
  return Dataset(std::move(out), std::move(labels));
}

Vector column_means(const Matrix& points) {
  require(points.rows() > 0, ErrorCode::kEmptyInput, "no rows");
  return points.colwise().mean().transpose();
}

Vector column_sds(const Matrix& points) {
  require(points.rows() > 0, ErrorCode::kEmptyInput, "no rows");
  const Vector mean = column_means(points);
  Vector sd(points.cols());
  const double denom =
      points.rows() > 1 ? static_cast<double>(points.rows() - 1) : 1.0;
  for (Eigen::Index j = 0; j < points.cols(); ++j) {
    sd(j) = std::sqrt((points.col(j).array() - mean(j)).square().sum() / denom);
  }
  return sd;
}

}  // namespace hdshapes
