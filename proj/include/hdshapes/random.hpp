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
#include <cstdint>
#include <random>
#include <vector>

namespace hdshapes {

std::uint64_t splitmix64(std::uint64_t x);

// Seeded source of variates. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the variate transforms below are
// implemented here rather than through <random> distributions, whose
// algorithms vary between standard libraries. Identical (seed, path) pairs
// therefore give bit-identical draws on every platform.
//
// Copies share nothing: a copied stream continues independently from the
// same state.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  const std::vector<std::uint64_t>& path() const { return path_; }

  // Child stream for sub-task `index`. Depends only on (seed, path, index),
  // never on how many draws the parent has made.
  RandomStream derive(std::uint64_t index) const;

  std::uint64_t next_u64() { return engine_(); }

  // [0, 1) with 53 random bits.
  double uniform();
  // [a, b)
  double uniform(double a, double b);
  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  double normal();
  double normal(double mean, double sd);
  double exponential(double rate);

  // Fisher-Yates permutation of 0..n-1.
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  RandomStream(std::uint64_t seed, std::vector<std::uint64_t> path,
               std::uint64_t key);

  std::uint64_t seed_;
  std::vector<std::uint64_t> path_;
  std::uint64_t key_;
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

RandomStream make_stream(std::uint64_t seed);

}  // namespace hdshapes
