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

#include "hdshapes/topology.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hdshapes/error.hpp"
#include "hdshapes/shapes.hpp"

namespace hdshapes {

HoleResult gen_hole(const Dataset& ds, const HoleSpec& spec) {
  require(!ds.empty(), ErrorCode::kEmptyInput, "cannot punch a hole in empty data");
  require(spec.r > 0.0 && std::isfinite(spec.r), ErrorCode::kParameter,
          "hole radius must be positive");
  const Vector anchor = spec.anchor ? *spec.anchor : column_means(ds.points());
  require(static_cast<std::size_t>(anchor.size()) == ds.cols(),
          ErrorCode::kShape,
          "hole anchor has length " + std::to_string(anchor.size()) +
              " but data has " + std::to_string(ds.cols()) + " columns");

  std::vector<std::size_t> keep;
  const Matrix& x = ds.points();
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const double distance = (x.row(i).transpose() - anchor).norm();
    if (distance > spec.r) keep.push_back(static_cast<std::size_t>(i));
  }
  require(!keep.empty(), ErrorCode::kDegenerateHole,
          "hole of radius " + std::to_string(spec.r) + " removes every point");
  HoleResult result;
  result.low_retention = static_cast<double>(keep.size()) <
                         kLowRetentionFraction * static_cast<double>(ds.rows());
  result.data = ds.select_rows(keep);
  result.anchor = anchor;
  return result;
}

namespace {

constexpr double kOversampleMargin = 1.1;
constexpr std::size_t kMaxRounds = 20;

// Draws a base sample, punches the hole around its mean, and trims the
// survivors at random to exactly n (order preserved). When too few survive,
// the removed fraction seen so far sizes the next, larger draw.
HoleResult oversample_and_trim(
    std::size_t n, double r_hole,
    const std::function<Dataset(std::size_t, RandomStream&)>& base,
    RandomStream& stream) {
  require(n >= 1, ErrorCode::kParameter, "n must be >= 1");
  auto draw = static_cast<std::size_t>(
      std::ceil(static_cast<double>(n) * kOversampleMargin));
  for (std::size_t round = 0; round < kMaxRounds; ++round) {
    RandomStream rng = stream.derive(2 * round);
    const Dataset sample = base(draw, rng);
    HoleResult punched = gen_hole(sample, {std::nullopt, r_hole});
    const std::size_t kept = punched.data.rows();
    if (kept >= n) {
      RandomStream trim = stream.derive(2 * round + 1);
      auto order = trim.permutation(kept);
      order.resize(n);
      std::sort(order.begin(), order.end());
      punched.data = punched.data.select_rows(order);
      return punched;
    }
    const double removed =
        1.0 - static_cast<double>(kept) / static_cast<double>(sample.rows());
    const auto next = static_cast<std::size_t>(std::ceil(
        static_cast<double>(n) / (1.0 - removed) * kOversampleMargin));
    draw = std::max(next, draw + 1);
  }
  fail(ErrorCode::kDegenerateHole,
       "could not retain " + std::to_string(n) + " points outside the hole");
}

}  // namespace

HoleResult gen_scurvehole(std::size_t n, double r_hole, RandomStream& stream) {
  return oversample_and_trim(
      n, r_hole,
      [](std::size_t m, RandomStream& rng) { return gen_scurve(m, rng); },
      stream);
}

HoleResult gen_unifcubehole(std::size_t n, std::size_t p, double r_hole,
                            RandomStream& stream) {
  require(p >= 1, ErrorCode::kDimension, "unifcubehole needs p >= 1");
  return oversample_and_trim(
      n, r_hole,
      [p](std::size_t m, RandomStream& rng) {
        return gen_cube(CubeKind::kUnif, m, p, rng);
      },
      stream);
}

}  // namespace hdshapes
