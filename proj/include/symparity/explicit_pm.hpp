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

#include <cstdint>
#include <vector>

#include "symparity/game.hpp"
#include "symparity/rank.hpp"

namespace symparity {

using RankingFunction = std::vector<Rank>;

/// min over successors for Even-owned v, max for Odd-owned v.
Rank best(const ParityGame& game, const RankingFunction& rho, Vertex v);

/// incr_{Ω(v)}(best(ρ, v)); the value lift(ρ, v) assigns to v.
Rank lifted_value(const ParityGame& game, const RankDomain& domain, const RankingFunction& rho,
                  Vertex v);

/// Applies the lift at v only.
RankingFunction lift(const ParityGame& game, const RankDomain& domain, RankingFunction rho,
                     Vertex v);

struct ExplicitPmResult {
  RankingFunction rho;
  VertexList winning_even;  // sorted
  std::uint64_t lifts = 0;
};

/**
 * Least simultaneous fixed point of all lift operators, by a work list seeded
 * with every vertex that re-queues the predecessors of lifted vertices. With
 * `order` the initial queue follows that permutation.
 */
ExplicitPmResult solve_explicit_pm(const ParityGame& game, const RankDomain& domain,
                                   const std::vector<Vertex>* order = nullptr);

/// Full domain on the normalized game; returns Even's winning set.
VertexList explicit_winning_even(const ParityGame& game);

/// Winning set of `player` (solved with a role swap for Odd).
VertexList explicit_winning(const ParityGame& game, Player player);

/// True iff `player` wins from every vertex of the induced subgame on `d`
/// and the opponent cannot leave `d`.
bool is_dominion(const ParityGame& game, Player player, const VertexList& d);

/// Every nonempty dominion of `player` with at most `max_size` vertices.
std::vector<VertexList> enumerate_dominions_bruteforce(const ParityGame& game, Player player,
                                                       std::size_t max_size);

}  // namespace symparity
