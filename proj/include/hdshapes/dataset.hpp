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

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hdshapes {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Labels = std::vector<std::string>;

// An n x p point cloud with canonical column names x1..xp and optional
// per-row labels. Construction rejects non-finite entries and label vectors
// whose length differs from the row count.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(Matrix points, std::optional<Labels> labels = std::nullopt);

  const Matrix& points() const { return points_; }
  const std::optional<Labels>& labels() const { return labels_; }
  bool has_labels() const { return labels_.has_value(); }

  std::size_t rows() const { return static_cast<std::size_t>(points_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(points_.cols()); }
  bool empty() const { return points_.size() == 0; }

  std::vector<std::string> column_names() const;

  // Sorted distinct labels; empty when unlabeled.
  std::vector<std::string> distinct_labels() const;

  // Rows whose label equals `label`, order preserved.
  Dataset subset(const std::string& label) const;
  Dataset select_rows(const std::vector<std::size_t>& rows) const;

  Dataset with_labels(Labels labels) const;
  Dataset with_label(const std::string& label) const;
  Dataset without_labels() const;

  bool operator==(const Dataset& other) const;

 private:
  Matrix points_;
  std::optional<Labels> labels_;
};

std::string column_name(std::size_t index);

// Column-wise concatenation: [left | right]. Labels follow `left`.
Dataset append_columns(const Dataset& left, const Matrix& right);

// Row-wise concatenation. Either all inputs are labeled or none are.
Dataset concat_rows(const std::vector<Dataset>& parts);

Vector column_means(const Matrix& points);
Vector column_sds(const Matrix& points);

}  // namespace hdshapes
