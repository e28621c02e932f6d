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

inline constexpr double kDefaultNoiseSd = 0.2;

// p independent columns X_j ~ N(m_j, s_j^2); odd-numbered columns (x1, x3,
// ...) are negated after sampling.
Dataset gen_noisedims(std::size_t n, std::size_t p, const Vector& mean,
                      const Vector& sd, RandomStream& stream);

// Same with mean 0 and sd 0.2 in every column.
Dataset gen_noisedims(std::size_t n, std::size_t p, RandomStream& stream);

// X_j = 0.1 * j * theta + N(0, sigma^2).
Dataset gen_wavydims1(std::size_t n, std::size_t p, const Vector& theta,
                      RandomStream& stream, double sigma = 0.05);

inline double wavy1_slope(std::size_t j) { return 0.1 * static_cast<double>(j); }

struct WavyDims2 {
  Dataset data;
  std::vector<int> powers;
  std::vector<double> scales;
};

// X_j = beta_j * (-1)^floor(j/2) * x1^k_j + U(-noise, noise), with
// k_j drawn from {2, 3, 4} and beta_j ~ U(0.5, 1.5).
WavyDims2 gen_wavydims2(std::size_t n, std::size_t p, const Vector& x1,
                        RandomStream& stream, double noise = 0.05);

// (-1)^floor(j/2) for 1-based column j.
double wavy2_sign(std::size_t j);

// Column j > 3 of gen_wavydims3 before noise, from base coordinates
// (x1, x2, x3). The forms cycle with period four.
double wavy3_form(std::size_t j, double x1, double x2, double x3);

// First three columns: base columns plus U(-noise, noise). Columns j > 3:
// wavy3_form(j, ...) plus U(-noise, noise). p >= 3.
Dataset gen_wavydims3(std::size_t n, std::size_t p, const Dataset& base,
                      RandomStream& stream, double noise = 0.05);

}  // namespace hdshapes
