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
#include "corpus.hpp"

using namespace symparity;
using namespace symparity::testing;

TEST_CASE("attractor examples") {
  const ParityGame g = ex1();
  SymbolicGame sg(g);
  const AttractorResult of_f = attractor(sg, Player::Even, sg.singleton(F), nullptr, true);
  CHECK(sg.members(of_f.attractor) == vs("cdefgh"));
  REQUIRE(of_f.layers.size() >= 2);
  CHECK(sg.members(of_f.layers[0]) == vs("f"));
  CHECK(sg.members(of_f.layers[1]) == vs("df"));
  CHECK(sg.members(of_f.layers.back()) == vs("cdefgh"));

  std::vector<Vertex> sigma(g.vertex_count(), kNoVertex);
  const AttractorResult a = attractor(sg, Player::Even, sg.from(vs("defg")), nullptr, false, &sigma);
  CHECK(sg.members(a.attractor) == vs("cdefgh"));
  CHECK(sigma[C] == D);
  CHECK(sigma[H] == G);
  CHECK(sigma[A] == kNoVertex);

  CHECK(sg.members(attractor(sg, Player::Odd, sg.singleton(A)).attractor) == vs("ab"));
}

TEST_CASE("attractor inside a mask") {
  SymbolicGame sg(ex1());
  const VertexSet m = sg.from(vs("abcd"));
  // c can move to d directly; b (Odd) can avoid d by going to a
  CHECK(sg.members(attractor(sg, Player::Even, sg.singleton(D), &m).attractor) == vs("cd"));
}

TEST_CASE("traps") {
  SymbolicGame sg(ex1());
  CHECK(is_trap(sg, Player::Odd, sg.from(vs("defg"))));
  CHECK(is_trap(sg, Player::Even, sg.from(vs("ab"))));
  CHECK_FALSE(is_trap(sg, Player::Odd, sg.singleton(A)));
  const VertexSet complement = sg.subtract(sg.all(), attractor(sg, Player::Even, sg.singleton(F)).attractor);
  CHECK(is_trap(sg, Player::Even, complement));
}

TEST_CASE("classic recursion on ex1") {
  SolveOptions o;
  o.strategies = true;
  const SolveReport rep = classic_parity(ex1(), o);
  CHECK(rep.algorithm == "zielonka");
  CHECK(rep.winning_even == vs("cdefgh"));
  CHECK(rep.winning_odd == vs("ab"));
  REQUIRE(rep.strategy_even);
  REQUIRE(rep.strategy_odd);
  CHECK(verify_strategy(ex1(), Player::Even, rep.winning_even, *rep.strategy_even));
  CHECK(rep.strategy_odd->domain() == vs("b"));
  CHECK(rep.strategy_odd->choice[B] == A);
}

TEST_CASE("single priority game") {
  const ParityGame g = build_game({Player::Even, Player::Odd}, {0, 0}, {{1, 0}, {0}});
  SolveOptions o;
  o.strategies = true;
  const SolveReport rep = classic_parity(g, o);
  CHECK(rep.winning_even == VertexList{0, 1});
  REQUIRE(rep.strategy_even);
  CHECK(rep.strategy_even->defined(0));
  CHECK(verify_strategy(g, Player::Even, rep.winning_even, *rep.strategy_even));
}

TEST_CASE("classic recursion agrees with the oracle") {
  for (const auto& g : make_corpus({80, 1, 16, 1, 8, 4, 31})) {
    SolveOptions o;
    o.strategies = true;
    const SolveReport rep = classic_parity(g, o);
    CHECK(rep.winning_even == explicit_winning_even(g));
    CHECK(verify_strategy(g, Player::Even, rep.winning_even, *rep.strategy_even));
    CHECK(verify_strategy(g, Player::Odd, rep.winning_odd, *rep.strategy_odd));
    CHECK(rep.counters.peak_live_sets <= 4 * g.priority_count() + 8);
  }
}

TEST_CASE("bdd backend gives the same recursion") {
  for (const auto& g : make_corpus({20, 1, 16, 1, 6, 3, 32})) {
    SolveOptions o;
    o.backend = BackendKind::Bdd;
    const SolveReport a = classic_parity(g);
    const SolveReport b = classic_parity(g, o);
    CHECK(a.winning_even == b.winning_even);
    CHECK(a.counters.cpre_ops == b.counters.cpre_ops);
  }
}
