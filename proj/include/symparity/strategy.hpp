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

#include <stdexcept>
#include <string>
#include <vector>

#include "symparity/game.hpp"

namespace symparity {

/// Memoryless strategy: choice[v] is the successor picked at v, or kNoVertex.
struct Strategy {
  Player player = Player::Even;
  std::vector<Vertex> choice;

  Strategy() = default;
  Strategy(Player p, std::size_t n) : player(p), choice(n, kNoVertex) {}

  bool defined(Vertex v) const { return v < choice.size() && choice[v] != kNoVertex; }
  /// Vertices with a choice, ascending.
  VertexList domain() const;
  /// Drops every choice outside `keep`.
  void restrict_to(const VertexList& keep);
};

class IncompleteStrategy : public std::runtime_error {
 public:
  explicit IncompleteStrategy(Vertex v)
      : std::runtime_error("no strategy choice for winning vertex " + std::to_string(v)),
        vertex_(v) {}
  Vertex vertex() const noexcept { return vertex_; }

 private:
  Vertex vertex_;
};

enum class StrategyFault {
  None,
  MissingChoice,
  NotAnEdge,
  StrategyLeavesW,
  OpponentEscapes,
  LosingCycle,
};

struct StrategyCheck {
  bool ok = true;
  StrategyFault fault = StrategyFault::None;
  Vertex vertex = kNoVertex;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

/**
 * Checks that `strategy` wins for `player` from every vertex of `w`: every
 * player vertex in w has a choice along an edge into w, opponent vertices in
 * w cannot leave, and in the game restricted to those edges the player wins
 * all of w (decided with the explicit oracle).
 */
StrategyCheck verify_strategy(const ParityGame& game, Player player, const VertexList& w,
                              const Strategy& strategy);

}  // namespace symparity
