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

#include <cstddef>
#include <vector>

#include "hdshapes/dataset.hpp"
#include "hdshapes/random.hpp"

namespace hdshapes {

// Rotation by `angle` radians in the plane of axes i and j (1-based,
// i < j), taking e_i toward e_j.
struct PlaneRotation {
  std::size_t i = 1;
  std::size_t j = 2;
  double angle = 0.0;
};

struct RotationPlan {
  std::size_t dim = 0;
  std::vector<PlaneRotation> steps;
};

void validate(const RotationPlan& plan);

// Realizes a plan as R = G_m * ... * G_1 acting on column vectors, so step 1
// is applied to a point first. The result is orthogonal with det(R) = +1.
Matrix gen_rotation(const RotationPlan& plan);

// Applies R to every row: x -> R x.
Matrix rotate_rows(const Matrix& points, const Matrix& rotation);

// k near-equal factors (each >= 1, differing by at most 1) whose product is
// the smallest such product that is >= target.
std::vector<std::size_t> gen_nproduct(std::size_t target, std::size_t k);

// k integers >= 1 summing exactly to target, differing by at most 1; the
// remainder goes to the leading entries.
std::vector<std::size_t> gen_nsum(std::size_t target, std::size_t k);

// Rescales each column to [0, 1]. Constant columns map to 0.
Dataset normalize_data(const Dataset& ds);

Dataset randomize_rows(const Dataset& ds, RandomStream& stream);

// Moves each labeled cluster so its centroid equals a row of `loc`. Rows of
// `loc` correspond to the distinct labels in lexicographic order.
Dataset relocate_clusters(const Dataset& ds, const Matrix& loc);

// n rows, column j ~ Normal(mean_j, sd_j^2), independent.
Dataset gen_bkgnoise(std::size_t n, std::size_t p, const Vector& mean,
                     const Vector& sd, RandomStream& stream);

}  // namespace hdshapes
