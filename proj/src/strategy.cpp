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

#include "symparity/strategy.hpp"

#include <algorithm>

#include "symparity/explicit_pm.hpp"

namespace symparity {

VertexList Strategy::domain() const {
  VertexList out;
  for (Vertex v = 0; v < choice.size(); ++v) {
    if (choice[v] != kNoVertex) out.push_back(v);
  }
  return out;
}

void Strategy::restrict_to(const VertexList& keep) {
  std::vector<bool> in(choice.size(), false);
  for (Vertex v : keep) in[v] = true;
  for (Vertex v = 0; v < choice.size(); ++v) {
    if (!in[v]) choice[v] = kNoVertex;
  }
}

namespace {

StrategyCheck fail(StrategyFault fault, Vertex v, std::string reason) {
  return {false, fault, v, std::move(reason)};
}

}  // namespace

StrategyCheck verify_strategy(const ParityGame& game, Player player, const VertexList& w,
                              const Strategy& strategy) {
  const std::size_t n = game.vertex_count();
  std::vector<bool> in(n, false);
  for (Vertex v : w) {
    if (v >= n) return fail(StrategyFault::MissingChoice, v, "vertex outside the game");
    in[v] = true;
  }
  for (Vertex v : w) {
    auto succ = game.successors(v);
    if (game.owner(v) == player) {
      if (!strategy.defined(v)) {
        return fail(StrategyFault::MissingChoice, v, "no choice at " + std::to_string(v));
      }
      const Vertex to = strategy.choice[v];
      if (std::find(succ.begin(), succ.end(), to) == succ.end()) {
        return fail(StrategyFault::NotAnEdge, v,
                    std::to_string(v) + " -> " + std::to_string(to) + " is not an edge");
      }
      if (!in[to]) {
        return fail(StrategyFault::StrategyLeavesW, v,
                    std::to_string(v) + " -> " + std::to_string(to) + " leaves the winning set");
      }
    } else if (std::any_of(succ.begin(), succ.end(), [&](Vertex x) { return !in[x]; })) {
      return fail(StrategyFault::OpponentEscapes, v,
                  "opponent vertex " + std::to_string(v) + " can leave the winning set");
    }
  }
  if (w.empty()) return {};

  // Restricted game on w: the player's edges fixed, the opponent's intact.
  VertexList members(w);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<Vertex> local(n, kNoVertex);
  for (Vertex i = 0; i < members.size(); ++i) local[members[i]] = i;
  std::vector<Player> owners;
  std::vector<Priority> priorities;
  std::vector<VertexList> succs;
  for (Vertex v : members) {
    owners.push_back(game.owner(v));
    priorities.push_back(game.priority(v));
    VertexList out;
    if (game.owner(v) == player) {
      out.push_back(local[strategy.choice[v]]);
    } else {
      for (Vertex x : game.successors(v)) out.push_back(local[x]);
    }
    succs.push_back(std::move(out));
  }
  const ParityGame restricted = build_game(std::move(owners), std::move(priorities), succs);
  const VertexList won = explicit_winning(restricted, player);
  if (won.size() != members.size()) {
    std::vector<bool> ok(members.size(), false);
    for (Vertex i : won) ok[i] = true;
    Vertex bad = 0;
    while (ok[bad]) ++bad;
    return fail(StrategyFault::LosingCycle, members[bad],
                "opponent wins against the strategy from " + std::to_string(members[bad]));
  }
  return {};
}

}  // namespace symparity
