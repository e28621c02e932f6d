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
#include <string>
#include <utility>

#include "hdshapes/core.hpp"
#include "hdshapes/error.hpp"
#include "hdshapes/shapes.hpp"

namespace hdshapes {

namespace {

struct Box {
  double x_lo, x_hi, y_lo, y_hi;

  double area() const { return (x_hi - x_lo) * (y_hi - y_lo); }
};

double overlap_area(const Box& a, const Box& b) {
  const double w = std::min(a.x_hi, b.x_hi) - std::max(a.x_lo, b.x_lo);
  const double h = std::min(a.y_hi, b.y_hi) - std::max(a.y_lo, b.y_lo);
  return (w > 0.0 && h > 0.0) ? w * h : 0.0;
}

// Largest fraction of `candidate` covered by any existing box.
double worst_overlap(const Box& candidate, const std::vector<Box>& boxes) {
  const double area = candidate.area();
  if (area <= 0.0) return 0.0;
  double worst = 0.0;
  for (const auto& box : boxes) {
    worst = std::max(worst, overlap_area(candidate, box) / area);
  }
  return worst;
}

Box bounding_box(const Matrix& points) {
  return {points.col(0).minCoeff(), points.col(0).maxCoeff(),
          points.col(1).minCoeff(), points.col(1).maxCoeff()};
}

constexpr std::size_t kAttachTries = 100;
constexpr double kMaxOverlap = 0.5;

// Builds planar branches that attach to the existing structure for i >= 3.
// `sample_branch` fills a block for the given info and returns it;
// `propose` draws slope / start for a new attached branch.
template <typename Sample, typename Propose>
Branches planar_branches(std::size_t n, std::size_t k,
                         std::vector<BranchInfo> seeds, RandomStream& stream,
                         Sample sample_branch, Propose propose) {
  const auto sizes = gen_nsum(n, k);
  RandomStream layout = stream.derive(0);
  std::vector<Matrix> blocks;
  std::vector<Box> boxes;
  std::vector<BranchInfo> infos;
  for (std::size_t b = 0; b < k; ++b) {
    RandomStream branch_stream = stream.derive(b + 1);
    if (b < seeds.size()) {
      BranchInfo info = seeds[b];
      info.size = sizes[b];
      blocks.push_back(sample_branch(info, branch_stream));
      boxes.push_back(bounding_box(blocks.back()));
      infos.push_back(info);
      continue;
    }
    // Attach to a random existing point, retrying while the new branch's
    // box mostly overlaps an existing one. Keeps the least-overlapping try.
    std::size_t existing = 0;
    for (const auto& block : blocks) existing += static_cast<std::size_t>(block.rows());
    BranchInfo best;
    Matrix best_block;
    double best_overlap = 2.0;
    for (std::size_t attempt = 0; attempt < kAttachTries; ++attempt) {
      auto pick = static_cast<std::size_t>(layout.below(existing));
      std::size_t owner = 0;
      while (pick >= static_cast<std::size_t>(blocks[owner].rows())) {
        pick -= static_cast<std::size_t>(blocks[owner].rows());
        ++owner;
      }
      BranchInfo info = propose(layout);
      info.size = sizes[b];
      info.x_start = blocks[owner](static_cast<Eigen::Index>(pick), 0);
      info.y_start = blocks[owner](static_cast<Eigen::Index>(pick), 1);
      info.lower = info.x_start;
      info.upper = info.x_start + 1.0;
      RandomStream trial = branch_stream.derive(attempt);
      Matrix block = sample_branch(info, trial);
      const double overlap = worst_overlap(bounding_box(block), boxes);
      if (overlap < best_overlap) {
        best_overlap = overlap;
        best = info;
        best_block = std::move(block);
      }
      if (overlap < kMaxOverlap) break;
    }
    boxes.push_back(bounding_box(best_block));
    blocks.push_back(std::move(best_block));
    infos.push_back(best);
  }

  Matrix points(static_cast<Eigen::Index>(n), 2);
  Labels labels;
  labels.reserve(n);
  Eigen::Index offset = 0;
  for (std::size_t b = 0; b < k; ++b) {
    points.middleRows(offset, blocks[b].rows()) = blocks[b];
    offset += blocks[b].rows();
    labels.insert(labels.end(), static_cast<std::size_t>(blocks[b].rows()),
                  "branch_" + std::to_string(b + 1));
  }
  return {Dataset(std::move(points), std::move(labels)), std::move(infos)};
}

Branches linear_branches(std::size_t n, std::size_t k, RandomStream& stream) {
  std::vector<BranchInfo> seeds(2);
  seeds[0].slope = 0.5;
  seeds[1].slope = -0.5;
  for (auto& seed : seeds) {
    seed.lower = 0.0;
    seed.upper = 1.0;
  }
  auto sample = [](const BranchInfo& info, RandomStream& rng) {
    Matrix block(static_cast<Eigen::Index>(info.size), 2);
    for (Eigen::Index i = 0; i < block.rows(); ++i) {
      const double x = rng.uniform(info.lower, info.upper);
      block(i, 0) = x;
      block(i, 1) = info.slope * (x - info.x_start) + info.y_start +
                    rng.uniform(0.0, kBranchJitter);
    }
    return block;
  };
  auto propose = [](RandomStream& rng) {
    BranchInfo info;
    // Slopes in [-2, 2] away from (-0.1, 0.1).
    const double magnitude = rng.uniform(0.1, 2.0);
    info.slope = rng.uniform() < 0.5 ? -magnitude : magnitude;
    info.attached = true;
    return info;
  };
  return planar_branches(n, k, seeds, stream, sample, propose);
}

Branches curvy_branches(std::size_t n, std::size_t k, RandomStream& stream) {
  std::vector<BranchInfo> seeds(2);
  seeds[0].lower = 0.0;
  seeds[0].upper = 1.0;
  seeds[0].slope = 1.0;
  seeds[1].lower = -1.0;
  seeds[1].upper = 0.0;
  seeds[1].slope = -2.0;
  // The first two branches follow 0.1 x + s x^2 with symmetric jitter;
  // attached branches follow 0.1 x - s (x^2 - x_start) + y_start.
  auto sample = [](const BranchInfo& info, RandomStream& rng) {
    Matrix block(static_cast<Eigen::Index>(info.size), 2);
    for (Eigen::Index i = 0; i < block.rows(); ++i) {
      const double x = rng.uniform(info.lower, info.upper);
      block(i, 0) = x;
      if (info.attached) {
        block(i, 1) =
            0.1 * x - info.slope * (x * x - info.x_start) + info.y_start;
      } else {
        block(i, 1) = 0.1 * x + info.slope * x * x +
                      rng.uniform(-kBranchJitter, kBranchJitter);
      }
    }
    return block;
  };
  auto propose = [](RandomStream& rng) {
    static constexpr double kCurvatures[] = {-2.0, -1.5, -1.0, -0.5,
                                             0.0,  0.5,  1.0,  1.5};
    BranchInfo info;
    info.slope = kCurvatures[rng.below(8)];
    info.attached = true;
    return info;
  };
  return planar_branches(n, k, seeds, stream, sample, propose);
}

Branches exp_branches(std::size_t n, std::size_t k, RandomStream& stream) {
  const auto sizes = gen_nsum(n, k);
  RandomStream layout = stream.derive(0);
  Matrix points(static_cast<Eigen::Index>(n), 2);
  Labels labels;
  labels.reserve(n);
  std::vector<BranchInfo> infos;
  Eigen::Index row = 0;
  for (std::size_t b = 0; b < k; ++b) {
    BranchInfo info;
    info.size = sizes[b];
    info.lower = -2.0;
    info.upper = 2.0;
    const double sign = (b % 2 == 0) ? 1.0 : -1.0;
    info.slope = sign * layout.uniform(0.5, 2.0);
    RandomStream rng = stream.derive(b + 1);
    for (std::size_t i = 0; i < info.size; ++i, ++row) {
      const double x = rng.uniform(info.lower, info.upper);
      points(row, 0) = x;
      points(row, 1) = std::exp(info.slope * x) + rng.uniform(0.0, kBranchJitter);
    }
    labels.insert(labels.end(), info.size, "branch_" + std::to_string(b + 1));
    infos.push_back(info);
  }
  return {Dataset(std::move(points), std::move(labels)), std::move(infos)};
}

Branches origin_branches(bool curvy, std::size_t n, std::size_t k,
                         std::size_t p, bool allow_share,
                         RandomStream& stream) {
  require(p >= 2, ErrorCode::kDimension,
          "origin branches need p >= 2, got " + std::to_string(p));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = a + 1; b < p; ++b) pairs.emplace_back(a, b);
  }
  const auto sizes = gen_nsum(n, k);
  RandomStream layout = stream.derive(0);

  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  if (allow_share) {
    for (std::size_t b = 0; b < k; ++b) chosen.push_back(pairs[layout.below(pairs.size())]);
  } else {
    const auto order = layout.permutation(pairs.size());
    for (std::size_t b = 0; b < k; ++b) {
      chosen.push_back(b < pairs.size() ? pairs[order[b]]
                                        : pairs[layout.below(pairs.size())]);
    }
  }

  Matrix points(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  Labels labels;
  labels.reserve(n);
  std::vector<BranchInfo> infos;
  Eigen::Index row = 0;
  for (std::size_t b = 0; b < k; ++b) {
    BranchInfo info;
    info.size = sizes[b];
    info.lower = 0.0;
    info.upper = 1.0;
    info.axis_in = chosen[b].first;
    info.axis_out = chosen[b].second;
    // 15 values 1, 1.5, ..., 8 once every pair has a unit-scale branch.
    info.slope = b < pairs.size()
                     ? 1.0
                     : 1.0 + 0.5 * static_cast<double>(layout.below(15));
    RandomStream rng = stream.derive(b + 1);
    const auto in = static_cast<Eigen::Index>(info.axis_in);
    const auto out = static_cast<Eigen::Index>(info.axis_out);
    for (std::size_t i = 0; i < info.size; ++i, ++row) {
      for (Eigen::Index j = 0; j < points.cols(); ++j) {
        points(row, j) = rng.normal(0.0, kOrgBranchNoiseSd);
      }
      const double x = rng.uniform(info.lower, info.upper);
      points(row, in) = x;
      const double f = curvy ? -info.slope * x * x : info.slope * x;
      points(row, out) += f;
    }
    labels.insert(labels.end(), info.size, "branch_" + std::to_string(b + 1));
    infos.push_back(info);
  }
  return {Dataset(std::move(points), std::move(labels)), std::move(infos)};
}

}  // namespace

Branches gen_branches(BranchKind kind, std::size_t n, std::size_t k,
                      std::size_t p, bool allow_share, RandomStream& stream) {
  require(k >= 1, ErrorCode::kInfeasible, "branch count k must be >= 1");
  require(n >= k, ErrorCode::kInfeasible,
          "need at least one point per branch (n=" + std::to_string(n) +
              ", k=" + std::to_string(k) + ")");
  switch (kind) {
    case BranchKind::kLinear: return linear_branches(n, k, stream);
    case BranchKind::kCurvy: return curvy_branches(n, k, stream);
    case BranchKind::kExp: return exp_branches(n, k, stream);
    case BranchKind::kOrgLinear:
      return origin_branches(false, n, k, p, allow_share, stream);
    case BranchKind::kOrgCurvy:
      return origin_branches(true, n, k, p, allow_share, stream);
  }
  fail(ErrorCode::kParameter, "unknown branch kind");
}

}  // namespace hdshapes
