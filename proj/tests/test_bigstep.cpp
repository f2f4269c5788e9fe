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

TEST_CASE("gamma and beta") {
  CHECK(symparity::gamma(3) == Rational(1));
  CHECK(symparity::gamma(5) == Rational(2));
  CHECK(symparity::gamma(4) == Rational(3, 2));
  CHECK(symparity::beta(3) == Rational(1, 2));
  CHECK_THROWS_AS((void)symparity::beta(2), std::domain_error);
  for (std::int64_t c = 3; c <= 64; ++c) {
    const Rational g = symparity::gamma(c);
    const Rational b = symparity::beta(c);
    CHECK(b >= Rational(1, 2));
    CHECK(b <= Rational(7, 10));
    CHECK(g >= Rational(c, 3));
    CHECK(g <= Rational(c, 3) + Rational(1, 2));
  }
}

TEST_CASE("policies") {
  CHECK(BigStepPolicy::parse("sqrt").kind == BigStepPolicy::Kind::Sqrt);
  CHECK(BigStepPolicy::parse("gamma").kind == BigStepPolicy::Kind::Gamma);
  const BigStepPolicy f = BigStepPolicy::parse("fixed:5");
  CHECK(f.kind == BigStepPolicy::Kind::Fixed);
  CHECK(f.fixed_h == 5);
  CHECK(f.to_string() == "fixed:5");
  CHECK_THROWS_AS(BigStepPolicy::parse("cubic"), std::invalid_argument);
  CHECK_THROWS_AS(BigStepPolicy::parse("fixed:x"), std::invalid_argument);

  CHECK(choose_h(BigStepPolicy::sqrt(), 8, 8, 5) == 2);
  CHECK(choose_h(BigStepPolicy::gamma(), 40, 17, 3) == 17);
  CHECK(choose_h(BigStepPolicy::fixed(5), 3, 3, 5) == 3);
  CHECK(choose_h(BigStepPolicy::sqrt(), 1, 1, 5) <= 1);
  for (std::size_t n = 1; n <= 200; n += 7) {
    for (std::uint32_t c = 3; c <= 9; ++c) {
      CHECK(choose_h(BigStepPolicy::gamma(), 200, n, c) <= n);
    }
  }
}

TEST_CASE("big-step on ex1") {
  for (const auto& policy : {BigStepPolicy::sqrt(), BigStepPolicy::gamma(), BigStepPolicy::fixed(0)}) {
    SolveOptions o;
    o.strategies = true;
    o.check_invariants = true;
    const SolveReport rep = symbolic_big_step(ex1(), policy, o);
    CHECK(rep.algorithm == "bigstep/" + policy.to_string());
    CHECK(rep.winning_even == vs("cdefgh"));
    CHECK(rep.diagnostics.at("invariant_violations") == 0);
    CHECK(verify_strategy(ex1(), Player::Even, rep.winning_even, *rep.strategy_even));
    CHECK(verify_strategy(ex1(), Player::Odd, rep.winning_odd, *rep.strategy_odd));
  }
  // the first search at the top level finds {a,b} for Odd
  const SolveReport sq = symbolic_big_step(ex1(), BigStepPolicy::sqrt());
  CHECK(sq.diagnostics.at("dominion_calls") >= 1);
  CHECK(sq.diagnostics.at("dominion_vertices") == 2);
}

TEST_CASE("big-step agrees with the oracle and verifies strategies") {
  std::int64_t calls = 0, found = 0;
  for (const auto& g : make_corpus({50, 2, 20, 3, 8, 3, 2024})) {
    for (const auto& policy : {BigStepPolicy::sqrt(), BigStepPolicy::gamma(), BigStepPolicy::fixed(2)}) {
      SolveOptions o;
      o.strategies = true;
      const SolveReport rep = symbolic_big_step(g, policy, o);
      CHECK(rep.winning_even == explicit_winning_even(g));
      CHECK(verify_strategy(g, Player::Even, rep.winning_even, *rep.strategy_even));
      CHECK(verify_strategy(g, Player::Odd, rep.winning_odd, *rep.strategy_odd));
      CHECK(rep.diagnostics.at("removal_bound_violations") == 0);
      CHECK(rep.counters.peak_live_sets <= 4 * (g.vertex_count() + g.priority_count()));
      calls += rep.diagnostics.at("dominion_calls");
      found += rep.diagnostics.at("dominion_vertices");
    }
  }
  // the dominion step is exercised, not skipped
  CHECK(calls > 0);
  CHECK(found > 0);
}
