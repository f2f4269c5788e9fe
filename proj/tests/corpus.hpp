/*
 * Copyright 2026 The symparity Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "symparity/pgsolver.hpp"

namespace symparity::testing {

struct CorpusShape {
  std::size_t count;
  std::size_t n_min, n_max;
  Priority c_min, c_max;
  std::size_t deg_max;
  std::uint64_t seed;
};

/// Seeded family of random games; sizes drawn per game from the given ranges.
inline std::vector<ParityGame> make_corpus(const CorpusShape& shape) {
  std::mt19937_64 rng(shape.seed);
  std::uniform_int_distribution<std::size_t> n_dist(shape.n_min, shape.n_max);
  std::uniform_int_distribution<Priority> c_dist(shape.c_min, shape.c_max);
  std::vector<ParityGame> out;
  out.reserve(shape.count);
  for (std::size_t i = 0; i < shape.count; ++i) {
    const std::size_t n = n_dist(rng);
    const Priority c = c_dist(rng);
    const std::size_t deg = std::min(shape.deg_max, n);
    out.push_back(gen_random(n, c, 1, deg, rng()));
  }
  return out;
}

inline std::vector<ParityGame> cross_solver_corpus() {
  return make_corpus({200, 2, 12, 1, 6, 3, 20261016});
}

inline std::vector<ParityGame> small_dominion_corpus() {
  return make_corpus({100, 2, 8, 1, 6, 3, 7340033});
}

}  // namespace symparity::testing
