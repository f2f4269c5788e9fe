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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "common.hpp"
#include "corpus.hpp"

using namespace symparity;
using namespace symparity::testing;

namespace {
Rank rk(std::uint32_t x1, std::uint32_t x3) { return Rank({x1, x3}); }
}  // namespace

TEST_CASE("ex1 progress measure") {
  const ParityGame g = ex1();
  const RankDomain d = RankDomain::for_game(g);
  const ExplicitPmResult res = solve_explicit_pm(g, d);
  CHECK(res.rho[D] == rk(0, 0));
  CHECK(res.rho[F] == rk(0, 0));
  CHECK(res.rho[C] == rk(1, 0));
  CHECK(res.rho[H] == rk(2, 0));
  CHECK(res.rho[E] == rk(0, 1));
  CHECK(res.rho[G] == rk(0, 1));
  CHECK(res.rho[A].is_top());
  CHECK(res.rho[B].is_top());
  CHECK(res.winning_even == vs("cdefgh"));
  CHECK(solve_explicit_pm(g, RankDomain::for_game(g, 1)).winning_even == vs("cdefgh"));
}

TEST_CASE("best and lift") {
  const ParityGame g = ex1();
  const RankDomain d = RankDomain::for_game(g);
  const RankingFunction zero(8, d.zero());
  CHECK(best(g, zero, G) == rk(0, 0));
  const RankingFunction final_rho = solve_explicit_pm(g, d).rho;
  CHECK(best(g, final_rho, H) == rk(1, 0));
  CHECK(best(g, final_rho, B).is_top());
  CHECK(lift(g, d, zero, A)[A] == rk(1, 0));
  CHECK(lift(g, d, zero, E)[E] == rk(0, 1));
  CHECK(lift(g, d, zero, F) == zero);
  for (Vertex v = 0; v < 8; ++v) CHECK(lift(g, d, final_rho, v) == final_rho);
}

TEST_CASE("single vertex game") {
  const ParityGame g = build_game({Player::Even}, {0}, {{0}});
  const ExplicitPmResult res = solve_explicit_pm(g, RankDomain::for_game(g));
  CHECK(res.rho[0].is_zero());
  CHECK(res.winning_even == VertexList{0});
}

TEST_CASE("lifting order does not change the result") {
  std::mt19937_64 rng(3);
  for (const auto& g : make_corpus({30, 2, 12, 1, 6, 3, 77})) {
    const RankDomain d = RankDomain::for_game(g);
    const ExplicitPmResult ref = solve_explicit_pm(g, d);
    CHECK(ref.lifts <= d.size() * g.vertex_count());
    VertexList order = all_vertices(g);
    for (int k = 0; k < 5; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(solve_explicit_pm(g, d, &order).rho == ref.rho);
    }
  }
}

TEST_CASE("explicit winning sets partition the game") {
  for (const auto& g : make_corpus({30, 2, 12, 1, 6, 3, 78})) {
    VertexList even = explicit_winning(g, Player::Even);
    VertexList odd = explicit_winning(g, Player::Odd);
    CHECK(even.size() + odd.size() == g.vertex_count());
    CHECK(complement(even, g.vertex_count()) == odd);
  }
}

TEST_CASE("dominion enumeration on ex1") {
  const ParityGame g = ex1();
  CHECK(enumerate_dominions_bruteforce(g, Player::Odd, 2) == std::vector<VertexList>{vs("ab")});
  CHECK(enumerate_dominions_bruteforce(g, Player::Even, 2).empty());
  const auto all = enumerate_dominions_bruteforce(g, Player::Even, 8);
  CHECK(std::count(all.begin(), all.end(), vs("defg")) == 1);
  CHECK(std::count(all.begin(), all.end(), vs("cdefgh")) == 1);
  CHECK(is_dominion(g, Player::Odd, vs("ab")));
  CHECK_FALSE(is_dominion(g, Player::Even, vs("ab")));
  CHECK_FALSE(is_dominion(g, Player::Even, {}));
}
