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

// Independent reference computations for the test suites. Nothing here calls
// into the library's samplers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

// Two-sided Kolmogorov-Smirnov statistic of `sample` against `cdf`.
// `cdf_below` gives P(X < x); it differs from `cdf` only at atoms.
inline double ks_statistic(std::vector<double> sample,
                           const std::function<double(double)>& cdf,
                           std::function<double(double)> cdf_below = nullptr) {
  if (!cdf_below) cdf_below = cdf;
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    // Compare on both sides of each step of the empirical CDF; ties are
    // handled by the first and last index of a run.
    const double x = sample[i];
    if (i + 1 == sample.size() || sample[i + 1] != x) {
      d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - cdf(x)));
    }
    if (i == 0 || sample[i - 1] != x) {
      d = std::max(d, std::abs(cdf_below(x) - static_cast<double>(i) / n));
    }
  }
  return d;
}

// CDF of Exp(rate) conditioned on [0, h].
inline double truncated_exp_cdf(double x, double rate, double h) {
  if (x <= 0.0) return 0.0;
  if (x >= h) return 1.0;
  return (1.0 - std::exp(-rate * x)) / (1.0 - std::exp(-rate * h));
}

inline double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

inline double sd(const std::vector<double>& v) {
  const double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

inline double correlation(const std::vector<double>& a, const std::vector<double>& b) {
  const double ma = mean(a);
  const double mb = mean(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

// Least-squares slope of y on x.
inline double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

inline std::vector<double> column(const Eigen::MatrixXd& m, Eigen::Index j) {
  std::vector<double> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) out[static_cast<std::size_t>(i)] = m(i, j);
  return out;
}

inline Eigen::MatrixXd distance_matrix(const Eigen::MatrixXd& x) {
  const Eigen::Index n = x.rows();
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = (x.row(i) - x.row(j)).norm();
  }
  return d;
}

// Determinant by plain Gaussian elimination with partial pivoting.
inline double determinant(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  double det = 1.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = c;
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (std::abs(a(r, c)) > std::abs(a(pivot, c))) pivot = r;
    }
    if (a(pivot, c) == 0.0) return 0.0;
    if (pivot != c) {
      a.row(pivot).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      const double f = a(r, c) / a(c, c);
      a.row(r) -= f * a.row(c);
    }
  }
  return det;
}

// Plane rotation built entry by entry from the textbook definition: the
// identity except for the (i, j) block [[c, -s], [s, c]] (0-based i < j).
inline Eigen::MatrixXd givens(Eigen::Index p, Eigen::Index i, Eigen::Index j, double angle) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(p, p);
  g(i, i) = std::cos(angle);
  g(j, j) = std::cos(angle);
  g(i, j) = -std::sin(angle);
  g(j, i) = std::sin(angle);
  return g;
}

// Vertices of a regular p-simplex centred at the origin, one per row: the
// standard basis of R^(p+1), centred, expressed in an orthonormal basis of
// the hyperplane sum(x) = 0.
inline Eigen::MatrixXd regular_simplex(Eigen::Index p) {
  const Eigen::Index m = p + 1;
  Eigen::MatrixXd centred =
      Eigen::MatrixXd::Identity(m, m) - Eigen::MatrixXd::Constant(m, m, 1.0 / m);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(centred);
  const Eigen::MatrixXd q = qr.householderQ();
  return centred * q.leftCols(p);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

inline std::filesystem::path temp_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() /
             ("hdshapes_" + tag + "_" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace oracle
