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

namespace {

Strategy reference_strategy() {
  Strategy s(Player::Even, 8);
  s.choice[C] = D;
  s.choice[D] = F;
  s.choice[G] = E;
  s.choice[H] = G;
  return s;
}

}  // namespace

TEST_CASE("reference strategies") {
  const ParityGame g = ex1();
  CHECK(verify_strategy(g, Player::Even, vs("cdefgh"), reference_strategy()));
  Strategy odd(Player::Odd, 8);
  odd.choice[B] = A;
  CHECK(verify_strategy(g, Player::Odd, vs("ab"), odd));
}

TEST_CASE("faults") {
  const ParityGame g = ex1();
  Strategy s = reference_strategy();
  s.choice[C] = B;
  StrategyCheck r = verify_strategy(g, Player::Even, vs("cdefgh"), s);
  CHECK_FALSE(r);
  CHECK(r.fault == StrategyFault::StrategyLeavesW);
  CHECK(r.vertex == C);

  s = reference_strategy();
  s.choice[H] = kNoVertex;
  r = verify_strategy(g, Player::Even, vs("cdefgh"), s);
  CHECK(r.fault == StrategyFault::MissingChoice);
  CHECK(r.vertex == H);

  s = reference_strategy();
  s.choice[D] = E;
  CHECK(verify_strategy(g, Player::Even, vs("cdefgh"), s).fault == StrategyFault::NotAnEdge);

  // b (Odd) can leave {a,b,c} towards d
  Strategy a(Player::Even, 8);
  a.choice[A] = B;
  a.choice[C] = B;
  CHECK(verify_strategy(g, Player::Even, vs("abc"), a).fault == StrategyFault::OpponentEscapes);

  // a closed cycle whose top priority is odd
  const ParityGame loop = build_game({Player::Even, Player::Even}, {1, 0}, {{1}, {0}});
  Strategy cyc(Player::Even, 2);
  cyc.choice[0] = 1;
  cyc.choice[1] = 0;
  CHECK(verify_strategy(loop, Player::Even, {0, 1}, cyc).fault == StrategyFault::LosingCycle);
}

TEST_CASE("domain and restriction") {
  Strategy s = reference_strategy();
  CHECK(s.domain() == vs("cdgh"));
  s.restrict_to(vs("cd"));
  CHECK(s.domain() == vs("cd"));
  CHECK_FALSE(s.defined(G));
}
