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

#include "common.hpp"

using namespace symparity;
using namespace symparity::testing;

TEST_CASE("ex1 is a valid game") {
  const ParityGame g = ex1();
  CHECK(g.vertex_count() == 8);
  CHECK(g.priority_count() == 5);
  CHECK(g.edge_count() == 11);
  CHECK(g.owner(B) == Player::Odd);
  CHECK(g.priority(F) == 4);
  CHECK(g.name(H) == "h");
  CHECK(g.vertices_with_priority(1) == vs("ach"));
  CHECK(g.priority_size(3) == 1);
}

TEST_CASE("build_game rejects malformed input") {
  using P = Player;
  SUBCASE("sink vertex") {
    try {
      build_game({P::Even, P::Odd}, {0, 1}, {{1}, {}});
      FAIL("accepted a sink");
    } catch (const GameError& e) {
      CHECK(e.kind() == GameErrorKind::VertexWithoutSuccessor);
      CHECK(e.vertex() == 1);
    }
  }
  SUBCASE("dangling edge") {
    try {
      build_game({P::Even}, {0}, {{3}});
      FAIL("accepted a dangling edge");
    } catch (const GameError& e) {
      CHECK(e.kind() == GameErrorKind::DanglingEdge);
    }
  }
  SUBCASE("priority limit") {
    try {
      build_game({P::Even}, {7}, {{0}}, {}, Priority{4});
      FAIL("accepted priority 7 under limit 4");
    } catch (const GameError& e) {
      CHECK(e.kind() == GameErrorKind::PriorityOutOfRange);
    }
  }
}

TEST_CASE("duplicate successors are merged") {
  const ParityGame g = build_game({Player::Even, Player::Odd}, {0, 1}, {{1, 1, 0}, {0}});
  CHECK(g.successors(0).size() == 2);
  CHECK(g.successors(0)[0] == 1);
}

TEST_CASE("add_self_loops repairs sinks only") {
  const auto succ = add_self_loops({{1}, {}});
  CHECK(succ[0] == VertexList{1});
  CHECK(succ[1] == VertexList{1});
}

TEST_CASE("normalize_priorities") {
  using P = Player;
  const auto norm = [](std::vector<Priority> prio) {
    std::vector<VertexList> succ(prio.size());
    for (Vertex v = 0; v < prio.size(); ++v) succ[v] = {v};
    return normalize_priorities(build_game(std::vector<P>(prio.size(), P::Even), prio, succ))
        .game.priorities();
  };
  CHECK(norm({1, 3}) == std::vector<Priority>{1, 1});
  CHECK(norm({0, 0, 4}) == std::vector<Priority>{0, 0, 0});
  CHECK(norm({2, 5}) == std::vector<Priority>{0, 1});
  CHECK(normalize_priorities(ex1()).game == ex1());
  CHECK(is_normalized(ex1()));

  const auto res = normalize_priorities(build_game({P::Even, P::Odd}, {1, 6}, {{1}, {0}}));
  CHECK(res.remap[1] == 1);
  CHECK(res.remap[6] == 2);
  CHECK(res.remap[3] == kUnusedPriority);
}

TEST_CASE("normalization keeps the winner") {
  const ParityGame g = build_game({Player::Even, Player::Odd, Player::Even}, {3, 8, 9},
                                  {{1}, {2, 0}, {0}});
  CHECK(explicit_winning_even(g) == explicit_winning_even(normalize_priorities(g).game));
}

TEST_CASE("swap_roles_increment on ex1") {
  const ParityGame s = swap_roles_increment(ex1());
  CHECK(s.priorities() == std::vector<Priority>{2, 1, 2, 1, 4, 5, 3, 2});
  for (Vertex v = 0; v < 8; ++v) CHECK(s.owner(v) == opponent(ex1().owner(v)));
}

TEST_CASE("subgame") {
  const ParityGame g = ex1();
  const Subgame sub = subgame(g, vs("gfed"));
  REQUIRE(sub.game.vertex_count() == 4);
  CHECK(sub.to_parent == vs("defg"));
  // local ids: d=0 e=1 f=2 g=3
  CHECK(sub.game.successors(0)[0] == 2);
  CHECK(sub.game.successors(2)[0] == 3);
  CHECK(sub.game.successors(3)[0] == 1);
  CHECK(sub.game.successors(1)[0] == 0);
  CHECK(sub.game.edge_count() == 4);
  CHECK(sub.game.name(0) == "d");

  try {
    subgame(g, vs("a"));
    FAIL("a alone is not closed");
  } catch (const GameError& e) {
    CHECK(e.kind() == GameErrorKind::NotClosed);
    CHECK(e.vertex() == A);
  }
}

TEST_CASE("players") {
  CHECK(favoured_by(4) == Player::Even);
  CHECK(favoured_by(3) == Player::Odd);
  CHECK(opponent(Player::Even) == Player::Odd);
  CHECK(std::string(to_string(Player::Odd)) == "odd");
}
