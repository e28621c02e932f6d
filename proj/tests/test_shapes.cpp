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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hdshapes/core.hpp"
#include "hdshapes/error.hpp"
#include "hdshapes/shapes.hpp"
#include "support/oracle.hpp"

using namespace hdshapes;
using oracle::kPi;

namespace {

bool throws_code(const std::function<void()>& fn, ErrorCode code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

Dataset shape(const std::string& name, ShapeParams q, std::uint64_t seed = 1) {
  RandomStream s = make_stream(seed);
  return generate_shape(name, q, s);
}

ShapeParams with_n(std::size_t n) {
  ShapeParams q;
  q.n = n;
  return q;
}

double max_row_norm_error(const Matrix& m, double target, Eigen::Index cols) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    worst = std::max(worst, std::abs(m.row(i).head(cols).norm() - target));
  }
  return worst;
}

}  // namespace

TEST_CASE("registry covers every kind with its documented columns") {
  const std::map<std::string, std::size_t> fixed_dims = {
      {"expbranches", 2}, {"linearbranches", 2}, {"curvybranches", 2},
      {"mobius", 3},      {"quadratic", 2},      {"cubic", 2},
      {"scurve", 3},      {"unifsphere", 3},     {"swissroll", 3},
      {"trefoil4d", 4},   {"trefoil3d", 3},      {"crescent", 2}};
  CHECK(shape_registry().size() == 34);
  std::set<std::string> names;
  for (const auto& info : shape_registry()) {
    names.insert(info.name);
    CHECK(info.params.front() == "n");
    ShapeParams q = with_n(60);
    const Dataset a = shape(info.name, q, 7);
    const Dataset b = shape(info.name, q, 7);
    CAPTURE(info.name);
    CHECK(a == b);
    CHECK(a.points().allFinite());
    if (info.exact_n && info.name != "trefoil3d") CHECK(a.rows() == 60);
    CHECK(a.cols() == output_dim(info, q));
    if (auto it = fixed_dims.find(info.name); it != fixed_dims.end()) {
      CHECK(a.cols() == it->second);
      CHECK_FALSE(info.takes_p);
    }
  }
  CHECK(names.size() == 34);
  CHECK(throws_code([] { find_shape("dodecahedron"); }, ErrorCode::kRegistry));
}

TEST_CASE("parameters outside a kind's signature are rejected") {
  ShapeParams q = with_n(10);
  q.ratio = 0.5;
  CHECK(throws_code([&] { shape("gaussian", q); }, ErrorCode::kRejectedParameter));
  ShapeParams w = with_n(10);
  w.w = Interval{0, 1};
  CHECK(throws_code([&] { shape("cone", w); }, ErrorCode::kRejectedParameter));
  ShapeParams p = with_n(10);
  p.p = 2;
  CHECK(throws_code([&] { shape("cone", p); }, ErrorCode::kDimension));
}

TEST_CASE("linear branches") {
  RandomStream s = make_stream(21);
  const Branches b = gen_branches(BranchKind::kLinear, 300, 2, 2, false, s);
  REQUIRE(b.branches.size() == 2);
  CHECK(b.data.subset("branch_1").rows() == 150);
  CHECK(b.data.subset("branch_2").rows() == 150);
  CHECK(b.branches[0].slope == 0.5);
  const Matrix one = b.data.subset("branch_1").points();
  for (Eigen::Index i = 0; i < one.rows(); ++i) {
    const double residual =
        one(i, 1) - (0.5 * (one(i, 0) - b.branches[0].x_start) + b.branches[0].y_start);
    CHECK(residual >= 0.0);
    CHECK(residual <= kBranchJitter);
  }

  RandomStream t = make_stream(22);
  const Branches many = gen_branches(BranchKind::kLinear, 600, 6, 2, false, t);
  for (std::size_t i = 2; i < 6; ++i) {
    const auto& info = many.branches[i];
    CHECK(info.attached);
    CHECK(std::abs(info.slope) >= 0.1);
    CHECK(std::abs(info.slope) <= 2.0);
    const Matrix pts = many.data.subset("branch_" + std::to_string(i + 1)).points();
    for (Eigen::Index r = 0; r < pts.rows(); ++r) {
      const double residual = pts(r, 1) - (info.slope * (pts(r, 0) - info.x_start) + info.y_start);
      CHECK(residual >= 0.0);
      CHECK(residual <= kBranchJitter);
    }
  }
  CHECK(throws_code([] {
          RandomStream u = make_stream(1);
          gen_branches(BranchKind::kLinear, 3, 4, 2, false, u);
        }, ErrorCode::kInfeasible));
}

TEST_CASE("curvy branches follow their quadratics") {
  RandomStream s = make_stream(23);
  const Branches b = gen_branches(BranchKind::kCurvy, 500, 5, 2, false, s);
  const Matrix first = b.data.subset("branch_1").points();
  for (Eigen::Index i = 0; i < first.rows(); ++i) {
    CHECK(first(i, 0) >= 0.0);
    CHECK(first(i, 0) <= 1.0);
    CHECK(std::abs(first(i, 1) - (0.1 * first(i, 0) + first(i, 0) * first(i, 0))) <= kBranchJitter);
  }
  const Matrix second = b.data.subset("branch_2").points();
  for (Eigen::Index i = 0; i < second.rows(); ++i) {
    CHECK(second(i, 0) <= 0.0);
    CHECK(std::abs(second(i, 1) - (0.1 * second(i, 0) - 2 * second(i, 0) * second(i, 0))) <= kBranchJitter);
  }
  for (std::size_t k = 2; k < 5; ++k) {
    const auto& info = b.branches[k];
    const Matrix pts = b.data.subset("branch_" + std::to_string(k + 1)).points();
    for (Eigen::Index i = 0; i < pts.rows(); ++i) {
      const double x = pts(i, 0);
      CHECK(x >= info.x_start);
      CHECK(x <= info.x_start + 1.0);
      CHECK(std::abs(pts(i, 1) - (0.1 * x - info.slope * (x * x - info.x_start) + info.y_start)) < 1e-12);
    }
  }
}

TEST_CASE("exponential branches alternate the exponent sign") {
  RandomStream s = make_stream(24);
  const Branches b = gen_branches(BranchKind::kExp, 200, 2, 2, false, s);
  const double s2 = b.branches[1].slope;
  CHECK(s2 < 0.0);
  CHECK(-s2 >= 0.5);
  CHECK(-s2 <= 2.0);
  CHECK(b.branches[0].slope > 0.0);
  const Matrix two = b.data.subset("branch_2").points();
  for (Eigen::Index i = 0; i < two.rows(); ++i) {
    const double residual = two(i, 1) - std::exp(s2 * two(i, 0));
    CHECK(residual >= 0.0);
    CHECK(residual <= kBranchJitter);
  }
}

TEST_CASE("origin branches use distinct coordinate pairs without sharing") {
  RandomStream s = make_stream(25);
  const Branches b = gen_branches(BranchKind::kOrgLinear, 900, 3, 3, false, s);
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k < 3; ++k) {
    // Identify the active pair by variance: the two largest-variance columns.
    const Matrix pts = b.data.subset("branch_" + std::to_string(k + 1)).points();
    std::vector<std::pair<double, std::size_t>> var;
    for (Eigen::Index j = 0; j < 3; ++j) {
      const auto c = oracle::column(pts, j);
      var.emplace_back(oracle::sd(c), std::size_t(j));
    }
    std::sort(var.rbegin(), var.rend());
    pairs.insert(std::minmax(var[0].second, var[1].second));
    CHECK(var[2].first < 0.1);
  }
  CHECK(pairs.size() == 3);

  RandomStream t = make_stream(26);
  const Branches curvy = gen_branches(BranchKind::kOrgCurvy, 400, 2, 4, true, t);
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& info = curvy.branches[k];
    const Matrix pts = curvy.data.subset("branch_" + std::to_string(k + 1)).points();
    std::vector<double> residual;
    for (Eigen::Index i = 0; i < pts.rows(); ++i) {
      const double x = pts(i, Eigen::Index(info.axis_in));
      residual.push_back(pts(i, Eigen::Index(info.axis_out)) + info.slope * x * x);
    }
    CHECK(std::abs(oracle::mean(residual)) < 0.02);
    CHECK(std::abs(oracle::sd(residual) - kOrgBranchNoiseSd) < 0.01);
  }
  CHECK(throws_code([] {
          RandomStream u = make_stream(1);
          gen_branches(BranchKind::kOrgLinear, 10, 2, 1, false, u);
        }, ErrorCode::kDimension));
}

TEST_CASE("cone heights and cross-sections") {
  RandomStream s = make_stream(31);
  const Matrix c = gen_cone(5000, 4, 2.0, 0.3, s).points();
  const auto heights = oracle::column(c, 3);
  for (double z : heights) {
    CHECK(z >= 0.0);
    CHECK(z <= 2.0);
  }
  CHECK(oracle::ks_statistic(heights, [](double x) {
          return oracle::truncated_exp_cdf(x, 1.0, 2.0);
        }) < 0.03);
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    CHECK(std::abs(c.row(i).head(3).norm() - (0.3 + 0.7 * c(i, 3) / 2.0)) < 1e-9);
  }

  RandomStream t = make_stream(32);
  const Matrix cyl = gen_cone(500, 5, 3.0, 1.0, t).points();
  CHECK(max_row_norm_error(cyl, 1.0, 4) < 1e-9);

  RandomStream u = make_stream(33);
  const Matrix sharp = gen_cone(1000, 3, 4.0, 0.0, u).points();
  for (Eigen::Index i = 0; i < sharp.rows(); ++i) {
    CHECK(std::abs(sharp.row(i).head(2).norm() - sharp(i, 2) / 4.0) < 1e-9);
  }
  CHECK(throws_code([] {
          RandomStream v = make_stream(1);
          gen_cone(10, 3, 1.0, 1.5, v);
        }, ErrorCode::kParameter));
}

TEST_CASE("cubes") {
  RandomStream s = make_stream(41);
  const Matrix grid = gen_cube(CubeKind::kGrid, 1000, 3, s).points();
  CHECK(grid.rows() == 1000);
  for (Eigen::Index j = 0; j < 3; ++j) {
    std::set<double> levels;
    for (Eigen::Index i = 0; i < grid.rows(); ++i) {
      const double scaled = grid(i, j) * 9.0;
      CHECK(std::abs(scaled - std::round(scaled)) < 1e-12);
      levels.insert(std::round(scaled));
    }
    CHECK(levels.size() == 10);
  }

  RandomStream t = make_stream(42);
  const Matrix unif = gen_cube(CubeKind::kUnif, 500, 4, t).points();
  CHECK(unif.minCoeff() >= 0.0);
  CHECK(unif.maxCoeff() < 1.0);

  RandomStream u = make_stream(43);
  const Matrix square = gen_cube(CubeKind::kUnif, 10000, 2, u).points();
  int quadrant[4] = {0, 0, 0, 0};
  for (Eigen::Index i = 0; i < square.rows(); ++i) {
    ++quadrant[(square(i, 0) >= 0.5) + 2 * (square(i, 1) >= 0.5)];
  }
  for (int q : quadrant) CHECK(std::abs(q - 2500) <= 150);
}

TEST_CASE("gaussian") {
  RandomStream s = make_stream(51);
  const Matrix x = gen_gaussian(20000, 3, Matrix(), s).points();
  const Eigen::RowVectorXd mu = x.colwise().mean();
  const Matrix centred = x.rowwise() - mu;
  const Matrix cov = centred.transpose() * centred / double(x.rows() - 1);
  CHECK((cov - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 0.05);

  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = 1;
  diag(1, 1) = 4;
  RandomStream t = make_stream(52);
  const Matrix y = gen_gaussian(20000, 2, diag, t).points();
  const double ratio = std::pow(oracle::sd(oracle::column(y, 1)), 2) /
                       std::pow(oracle::sd(oracle::column(y, 0)), 2);
  CHECK(ratio >= 3.4);
  CHECK(ratio <= 4.6);

  RandomStream u = make_stream(53);
  CHECK(gen_gaussian(1, 5, Matrix(), u).points().allFinite());
  Matrix indefinite(2, 2);
  indefinite << 1, 2, 2, 1;
  CHECK(throws_code([&] { gen_gaussian(5, 2, indefinite, u); }, ErrorCode::kParameter));
}

TEST_CASE("long linear") {
  RandomStream s = make_stream(61);
  const LongLinear ll = gen_longlinear(1000, 5, s);
  std::vector<double> t(1000);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = double(i);
  for (Eigen::Index j = 0; j < 5; ++j) {
    CHECK(std::abs(oracle::correlation(oracle::column(ll.data.points(), j), t)) > 0.95);
    CHECK(std::abs(ll.scales(j)) <= 10.0);
    CHECK(std::abs(ll.shifts(j)) <= 300.0);
  }
  RandomStream a = make_stream(62);
  RandomStream b = make_stream(62);
  const LongLinear first = gen_longlinear(2, 3, a);
  const LongLinear second = gen_longlinear(2, 3, b);
  CHECK(first.data == second.data);
  CHECK(first.scales == second.scales);
  CHECK(first.data.rows() == 2);
}

TEST_CASE("mobius strip") {
  RandomStream s = make_stream(71);
  const Matrix m = gen_mobius(5000, s).points();
  std::set<int> bins;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double radius = m.row(i).head(2).norm();
    CHECK(radius >= 0.5 - 1e-12);
    CHECK(radius <= 1.5 + 1e-12);
    CHECK(std::abs(m(i, 2)) <= 0.5);
    double angle = std::atan2(m(i, 1), m(i, 0));
    if (angle < 0) angle += 2 * kPi;
    bins.insert(int(angle / (2 * kPi) * 36));
  }
  CHECK(bins.size() == 36);
}

TEST_CASE("polynomials") {
  RandomStream s = make_stream(81);
  const Matrix q = gen_polynomial(PolynomialKind::kQuadratic, 2000, {-1, 1}, s).points();
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    const double x = q(i, 0);
    const double e = q(i, 1) - (x - x * x);
    CHECK(e >= 0.0);
    CHECK(e <= 0.5);
  }
  RandomStream t = make_stream(82);
  const Matrix c = gen_polynomial(PolynomialKind::kCubic, 2000, {-1, 2}, t).points();
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    const double x = c(i, 0);
    CHECK(x >= -1.0);
    CHECK(x <= 2.0);
    const double e = c(i, 1) - (x + x * x - x * x * x);
    CHECK(e >= 0.0);
    CHECK(e <= 0.5);
  }
  RandomStream u = make_stream(83);
  CHECK(gen_polynomial(PolynomialKind::kQuadratic, 10000, {0, 1}, u).points().col(1).maxCoeff() <= 0.75);
  CHECK(throws_code([&] { gen_polynomial(PolynomialKind::kCubic, 5, {1, 1}, u); }, ErrorCode::kParameter));
}

TEST_CASE("pyramids") {
  PyramidParams rect;
  rect.n = 5000;
  rect.p = 5;
  rect.h = 4.0;
  rect.l_vec = {3.0, 2.0};
  rect.rt = 0.5;
  RandomStream s = make_stream(91);
  const Matrix r = gen_pyramid(PyramidKind::kRect, rect, s).points();
  CHECK(r.cols() == 5);
  std::vector<double> heights;
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    const double z = r(i, 4);
    heights.push_back(z);
    const double rx = 0.5 + 2.5 * z / 4.0;
    const double ry = 0.5 + 1.5 * z / 4.0;
    CHECK(std::abs(r(i, 0)) <= rx + 1e-12);
    CHECK(std::abs(r(i, 1)) <= ry + 1e-12);
    CHECK(std::abs(r(i, 2)) <= rx + 1e-12);
  }
  // Heights are min(Exp(2/h), h): an exponential CDF with an atom at h.
  auto below = [](double x) { return x <= 0 ? 0.0 : 1.0 - std::exp(-0.5 * std::min(x, 4.0)); };
  CHECK(oracle::ks_statistic(
            heights, [&](double x) { return x >= 4.0 ? 1.0 : below(x); }, below) < 0.03);

  PyramidParams tri;
  tri.n = 20000;
  tri.p = 4;
  tri.l = 3.0;
  tri.rt = 0.5;
  RandomStream t = make_stream(92);
  const Matrix tr = gen_pyramid(PyramidKind::kTri, tri, t).points();
  int cells[4] = {0, 0, 0, 0};
  for (Eigen::Index i = 0; i < tr.rows(); ++i) {
    const double scale = 0.5 + 2.5 * tr(i, 3) / 5.0;
    const double a = tr(i, 0) / scale, u = tr(i, 1) / scale, v = tr(i, 2) / scale;
    CHECK(std::abs(a + u + v - 1.0) < 1e-9);
    ++cells[u > 0.5 ? 0 : v > 0.5 ? 1 : a > 0.5 ? 2 : 3];
  }
  double chi2 = 0.0;
  for (int c : cells) chi2 += std::pow(c - 5000.0, 2) / 5000.0;
  CHECK(chi2 < 16.27);  // chi-square, 3 degrees of freedom, alpha = 0.001

  PyramidParams star;
  star.n = 2000;
  star.p = 3;
  star.h = 2.0;
  star.rb = 3.0;
  RandomStream u = make_stream(93);
  const Matrix st = gen_pyramid(PyramidKind::kStar, star, u).points();
  for (Eigen::Index i = 0; i < st.rows(); ++i) {
    const double z = st(i, 2);
    CHECK(z >= 0.0);
    CHECK(z <= 2.0);
    CHECK(st.row(i).head(2).norm() <= 3.0 * (1 - z / 2.0) + 1e-12);
    // Points lie on one of the six spokes at multiples of pi/3.
    if (st.row(i).head(2).norm() > 1e-9) {
      const double angle = std::atan2(st(i, 1), st(i, 0)) / (kPi / 3.0);
      CHECK(std::abs(angle - std::round(angle)) < 1e-9);
    }
  }

  PyramidParams bad = rect;
  bad.rt = 2.5;
  CHECK(throws_code([&] { gen_pyramid(PyramidKind::kRect, bad, u); }, ErrorCode::kParameter));
}

TEST_CASE("fractal pyramid stays in the hull and avoids the level-1 void") {
  PyramidParams frac;
  frac.n = 20000;
  frac.p = 2;
  RandomStream s = make_stream(94);
  const Matrix f = gen_pyramid(PyramidKind::kFrac, frac, s).points();
  const Matrix corners = fractal_simplex(2);
  CHECK(corners.rows() == 3);
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    const double x = f(i, 0), y = f(i, 1);
    CHECK(x >= 0.0);
    CHECK(y >= 0.0);
    CHECK(x + y <= 2.0 + 1e-12);
    if (i >= 1000) {
      const bool in_void = x < 1.0 && y < 1.0 && x + y > 1.0;
      CHECK_FALSE(in_void);
    }
  }
}

TEST_CASE("s-curve and swiss roll") {
  RandomStream s = make_stream(101);
  const Matrix c = gen_scurve(2000, s).points();
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    CHECK(std::abs(c(i, 0) * c(i, 0) + std::pow(std::abs(c(i, 2)) - 1, 2) - 1) < 1e-9);
    CHECK(c(i, 1) >= 0.0);
    CHECK(c(i, 1) <= 2.0);
    CHECK(std::abs(c(i, 2)) <= 2.0);
  }

  RandomStream t = make_stream(102);
  const Matrix r = gen_swissroll(2000, {-2, 3}, t).points();
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    const double radius = r.row(i).head(2).norm();
    CHECK(radius <= 3 * kPi);
    CHECK(r(i, 2) >= -2.0);
    CHECK(r(i, 2) <= 3.0);
    // t equals the radius; the angle must agree modulo 2 pi.
    CHECK(std::abs(r(i, 0) - radius * std::cos(radius)) < 1e-9);
    CHECK(std::abs(r(i, 1) - radius * std::sin(radius)) < 1e-9);
  }
  CHECK(throws_code([&] { gen_swissroll(5, {1, 1}, t); }, ErrorCode::kParameter));
}

TEST_CASE("sphere family") {
  RandomStream s = make_stream(111);
  CHECK(max_row_norm_error(gen_unifsphere(1000, 2.0, s).points(), 2.0, 3) < 1e-9);
  CHECK(throws_code([&] { gen_unifsphere(5, 0.0, s); }, ErrorCode::kParameter));

  const Matrix grid = gen_gridedsphere(1000, 3).points();
  const auto levels = gen_nproduct(1000, 2);
  CHECK(std::size_t(grid.rows()) == levels[0] * levels[1]);
  CHECK(max_row_norm_error(grid, 1.0, 3) < 1e-12);
  CHECK(max_row_norm_error(gen_gridedsphere(300, 5).points(), 1.0, 5) < 1e-12);

  RandomStream t = make_stream(112);
  CHECK(max_row_norm_error(gen_hollowsphere(1000, 6, t).points(), 1.0, 6) < 1e-12);

  RandomStream u = make_stream(113);
  const Matrix circle = gen_circle(500, 4, u).points();
  CHECK(max_row_norm_error(circle, 1.0, 2) < 1e-9);
  CHECK(circle.col(2).cwiseAbs().maxCoeff() <= std::sqrt(0.5) + 1e-9);
  CHECK(circle.col(3).cwiseAbs().maxCoeff() <= 0.5 + 1e-9);

  RandomStream v = make_stream(114);
  const Matrix cycle = gen_curvycycle(500, 3, v).points();
  for (Eigen::Index i = 0; i < cycle.rows(); ++i) {
    const double theta = std::atan2(cycle(i, 1) - std::sqrt(3.0) / 3.0, cycle(i, 0));
    CHECK(std::abs(cycle(i, 2) - std::cos(3 * theta) / 3.0) < 1e-9);
  }
  CHECK(throws_code([&] { gen_curvycycle(5, 2, v); }, ErrorCode::kDimension));

  ClusteredSpheresParams cs;
  cs.n_big = 300;
  cs.n_small = 50;
  cs.k = 4;
  cs.p = 3;
  RandomStream w = make_stream(115);
  const Dataset spheres = gen_clusteredspheres(cs, w);
  CHECK(spheres.rows() == 500);
  CHECK(spheres.distinct_labels() ==
        std::vector<std::string>{"big", "small_1", "small_2", "small_3", "small_4"});
  CHECK(max_row_norm_error(spheres.subset("big").points(), 10.0, 3) < 1e-9);
  const Matrix small = spheres.subset("small_2").points();
  const Eigen::RowVectorXd centre = small.colwise().mean();
  double spread = 0.0;
  for (Eigen::Index i = 0; i < small.rows(); ++i) spread = std::max(spread, (small.row(i) - centre).norm());
  CHECK(spread <= 2.0 + 1e-9);

  RandomStream x = make_stream(116);
  const Matrix hemi = gen_hemisphere(2000, 4, x).points();
  CHECK(max_row_norm_error(hemi, 1.0, 4) < 1e-12);
  CHECK(hemi.col(1).minCoeff() >= -1e-12);
  CHECK(throws_code([&] { gen_hemisphere(5, 3, x); }, ErrorCode::kDimension));
}

TEST_CASE("trefoil") {
  RandomStream s = make_stream(121);
  const Matrix four = gen_trefoil(TrefoilKind::k4d, 2000, 5, s).points();
  CHECK(four.rows() == 2000);
  CHECK(max_row_norm_error(four, 1.0, 4) < 1e-12);

  RandomStream t = make_stream(121);
  const Matrix three = gen_trefoil(TrefoilKind::k3d, 2000, 5, t).points();
  Eigen::Index row = 0;
  double worst = 0.0;
  for (Eigen::Index i = 0; i < four.rows(); ++i) {
    if (four(i, 3) >= 1.0) continue;
    for (Eigen::Index j = 0; j < 3; ++j) {
      worst = std::max(worst, std::abs(three(row, j) - four(i, j) / (1.0 - four(i, 3))));
    }
    ++row;
  }
  CHECK(row == three.rows());
  CHECK(worst < 1e-12);

  // The 1.5 frequency closes only after phi advances 4 pi.
  const auto start = trefoil_point(0.7, 0.0);
  CHECK((trefoil_point(0.7, 4 * kPi) - start).norm() < 1e-12);
  CHECK((trefoil_point(0.7, 2 * kPi) - start).norm() > 0.1);
}

TEST_CASE("trigonometric shapes") {
  const Matrix crescent = gen_crescent(100).points();
  double previous = -1.0;
  for (Eigen::Index i = 0; i < crescent.rows(); ++i) {
    CHECK(std::abs(crescent.row(i).squaredNorm() - 1.0) < 1e-12);
    double angle = std::atan2(crescent(i, 1), crescent(i, 0));
    if (angle <= 0.0) angle += 2 * kPi;
    CHECK(angle > previous);
    previous = angle;
  }
  CHECK(std::abs(crescent(0, 0) - std::cos(kPi / 6)) < 1e-12);
  CHECK(std::abs(crescent(99, 0) - 1.0) < 1e-12);
  CHECK(std::abs(crescent(99, 1)) < 1e-12);

  RandomStream s = make_stream(131);
  const Matrix cyl = gen_curvycylinder(2000, 5, 10.0, s).points();
  for (Eigen::Index i = 0; i < cyl.rows(); ++i) {
    CHECK(std::abs(cyl(i, 3) - std::sin(cyl(i, 2))) < 1e-12);
    CHECK(std::abs(cyl.row(i).head(2).squaredNorm() - 1.0) < 1e-12);
  }

  RandomStream t = make_stream(132);
  const Matrix nl = gen_nonlinear(2000, 4, 1.5, 0.5, t).points();
  for (Eigen::Index i = 0; i < nl.rows(); ++i) {
    const double x1 = nl(i, 0);
    CHECK(std::abs(nl(i, 1) - 1.5 / x1 - 0.5 * std::sin(x1)) < 1e-12);
    const double e = nl(i, 3) - std::cos(kPi * x1);
    CHECK(e >= -0.1);
    CHECK(e <= 0.1);
    CHECK(nl(i, 2) >= 0.1);
    CHECK(nl(i, 2) <= 0.8);
  }

  RandomStream u = make_stream(133);
  const Matrix helix = gen_helicalspiral(500, 4, u).points();
  for (Eigen::Index i = 0; i < helix.rows(); ++i) {
    double theta = std::atan2(helix(i, 1), helix(i, 0));
    if (theta < -1e-12) theta += 2 * kPi;
    CHECK(std::abs(helix(i, 3) - 0.1 * std::sin(theta)) < 1e-12);
    const double e = helix(i, 2) - 0.05 * theta;
    CHECK(e >= -0.5 - 1e-12);
    CHECK(e <= 0.5 + 1e-12);
  }

  RandomStream v = make_stream(134);
  const Matrix cone = gen_conicspiral(400, 4, 2, v).points();
  const double theta_max = 4 * kPi;
  for (Eigen::Index i = 0; i < cone.rows(); ++i) {
    const double theta = theta_max * double(i) / 399.0;
    CHECK(std::abs(cone(i, 0) - theta * std::cos(theta)) < 1e-9);
    const double e3 = cone(i, 2) - 2 * theta / theta_max;
    CHECK(e3 >= -0.1 - 1e-12);
    CHECK(e3 <= 0.6 + 1e-12);
  }

  RandomStream w = make_stream(135);
  const Matrix sph = gen_sphericalspiral(400, 4, 3, w).points();
  CHECK(sph(0, 3) == 0.0);
  CHECK(sph(399, 3) == 1.0);
}
