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

#include <cmath>

#include "hdshapes/error.hpp"
#include "hdshapes/noise.hpp"
#include "support/oracle.hpp"

using namespace hdshapes;

namespace {

bool throws_code(const std::function<void()>& fn, ErrorCode code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

Vector filled(Eigen::Index n, double v) { return Vector::Constant(n, v); }

}  // namespace

TEST_CASE("noise dims: moments, sign flip and independence") {
  RandomStream s = make_stream(1);
  const Matrix x = gen_noisedims(20000, 2, filled(2, 5), filled(2, 1), s).points();
  CHECK(std::abs(oracle::mean(oracle::column(x, 0)) + 5.0) < 0.05);
  CHECK(std::abs(oracle::mean(oracle::column(x, 1)) - 5.0) < 0.05);

  RandomStream t = make_stream(2);
  const Matrix y = gen_noisedims(20000, 1, filled(1, 0), filled(1, 2), t).points();
  CHECK(std::abs(oracle::sd(oracle::column(y, 0)) - 2.0) < 0.1);

  RandomStream u = make_stream(3);
  const Matrix z = gen_noisedims(20000, 5, u).points();
  for (Eigen::Index a = 0; a < 5; ++a) {
    CHECK(std::abs(oracle::sd(oracle::column(z, a)) - kDefaultNoiseSd) < 0.01);
    for (Eigen::Index b = a + 1; b < 5; ++b) {
      CHECK(std::abs(oracle::correlation(oracle::column(z, a), oracle::column(z, b))) < 0.03);
    }
  }
  CHECK(throws_code([&] { gen_noisedims(10, 2, filled(3, 0), filled(2, 1), u); }, ErrorCode::kShape));
  CHECK(throws_code([&] { gen_noisedims(10, 2, filled(2, 0), filled(2, 0), u); }, ErrorCode::kParameter));
}

TEST_CASE("wavy dims 1 follow theta with slopes 0.1 j") {
  RandomStream s = make_stream(4);
  Vector theta(10000);
  for (Eigen::Index i = 0; i < theta.size(); ++i) theta(i) = s.uniform(-3, 3);
  const std::vector<double> t(theta.data(), theta.data() + theta.size());

  RandomStream a = make_stream(5);
  const Matrix exact = gen_wavydims1(10000, 3, theta, a, 1e-9).points();
  for (Eigen::Index j = 0; j < 3; ++j) {
    CHECK(std::abs(std::abs(oracle::correlation(oracle::column(exact, j), t)) - 1.0) < 1e-6);
  }

  RandomStream b = make_stream(6);
  const Matrix noisy = gen_wavydims1(10000, 4, theta, b).points();
  const double ratio = oracle::slope(t, oracle::column(noisy, 1)) /
                       oracle::slope(t, oracle::column(noisy, 3));
  CHECK(std::abs(ratio / (wavy1_slope(2) / wavy1_slope(4)) - 1.0) < 0.02);

  RandomStream c = make_stream(7);
  const Matrix flat = gen_wavydims1(2000, 2, filled(2000, 1.0), c).points();
  CHECK(std::abs(oracle::sd(oracle::column(flat, 1)) - 0.05) < 0.01);
  CHECK(throws_code([&] { gen_wavydims1(5, 2, filled(4, 1.0), c); }, ErrorCode::kShape));
}

TEST_CASE("wavy dims 2 are signed powers of x1") {
  CHECK(wavy2_sign(1) == 1.0);
  CHECK(wavy2_sign(2) == -1.0);
  CHECK(wavy2_sign(3) == -1.0);
  CHECK(wavy2_sign(4) == 1.0);

  RandomStream s = make_stream(8);
  Vector x1(500);
  for (Eigen::Index i = 0; i < x1.size(); ++i) x1(i) = s.uniform(-1.5, 1.5);
  RandomStream a = make_stream(9);
  const WavyDims2 w = gen_wavydims2(500, 6, x1, a, 0.0);
  for (std::size_t j = 0; j < 6; ++j) {
    CHECK(w.powers[j] >= 2);
    CHECK(w.powers[j] <= 4);
    CHECK(w.scales[j] >= 0.5);
    CHECK(w.scales[j] <= 1.5);
    for (Eigen::Index i = 0; i < 500; ++i) {
      const double expected = w.scales[j] * wavy2_sign(j + 1) * std::pow(x1(i), w.powers[j]);
      CHECK(std::abs(w.data.points()(i, Eigen::Index(j)) - expected) < 1e-12);
    }
  }

  RandomStream b = make_stream(10);
  const WavyDims2 zero = gen_wavydims2(500, 3, Vector::Zero(500), b);
  CHECK(zero.data.points().cwiseAbs().maxCoeff() <= 0.05);
  CHECK(throws_code([&] { gen_wavydims2(5, 2, Vector::Zero(3), b); }, ErrorCode::kShape));
}

TEST_CASE("wavy dims 3 perturb and combine the base coordinates") {
  // Base cloud in the unit cube. (A base symmetric about the origin would
  // make the product forms exactly uncorrelated with every coordinate.)
  RandomStream s = make_stream(11);
  Matrix base(5000, 3);
  for (Eigen::Index i = 0; i < base.rows(); ++i) {
    for (Eigen::Index j = 0; j < 3; ++j) base(i, j) = s.uniform();
  }
  RandomStream a = make_stream(12);
  const Matrix out = gen_wavydims3(5000, 8, Dataset(base), a).points();
  CHECK((out.leftCols(3) - base).cwiseAbs().maxCoeff() <= 0.05);
  for (Eigen::Index j = 3; j < 8; ++j) {
    double best = 0.0;
    for (Eigen::Index b = 0; b < 3; ++b) {
      best = std::max(best, std::abs(oracle::correlation(oracle::column(out, j), oracle::column(base, b))));
    }
    CAPTURE(j);
    CHECK(best > 0.2);
  }

  RandomStream b = make_stream(13);
  const Matrix exact = gen_wavydims3(200, 8, Dataset(base.topRows(200)), b, 0.0).points();
  for (Eigen::Index i = 0; i < 200; ++i) {
    const double x1 = base(i, 0), x2 = base(i, 1), x3 = base(i, 2);
    CHECK(exact(i, 3) == doctest::Approx(x1 * x2).epsilon(1e-12));
    CHECK(exact(i, 4) == doctest::Approx(std::sin(x1) + x3 * x3).epsilon(1e-12));
    CHECK(exact(i, 5) == doctest::Approx(x1 * x1 - x2 * x3).epsilon(1e-12));
    CHECK(exact(i, 6) == doctest::Approx(std::cos(x2) * x3).epsilon(1e-12));
    CHECK(exact(i, 7) == doctest::Approx(x1 * x2).epsilon(1e-12));
  }
  CHECK(throws_code([&] { gen_wavydims3(10, 4, Dataset(Matrix::Zero(10, 2)), b); }, ErrorCode::kShape));
}

TEST_CASE("appending noise leaves existing columns alone") {
  RandomStream s = make_stream(14);
  Matrix x = Matrix::Random(50, 3);
  const Dataset base(x);
  const Dataset grown = append_columns(base, gen_noisedims(50, 2, s).points());
  CHECK(grown.cols() == 5);
  CHECK(grown.points().leftCols(3) == x);
}
