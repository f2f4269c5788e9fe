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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace symparity {

using Vertex = std::uint32_t;
using Priority = std::uint32_t;
using VertexList = std::vector<Vertex>;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr Priority kUnusedPriority = std::numeric_limits<Priority>::max();

enum class Player : std::uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player p) noexcept {
  return p == Player::Even ? Player::Odd : Player::Even;
}

/// The player that wins plays whose highest recurring priority is `p`.
constexpr Player favoured_by(Priority p) noexcept {
  return (p & 1U) == 0 ? Player::Even : Player::Odd;
}

const char* to_string(Player p) noexcept;

enum class GameErrorKind {
  VertexWithoutSuccessor,
  PriorityOutOfRange,
  DanglingEdge,
  NotClosed,
};

class GameError : public std::runtime_error {
 public:
  GameError(GameErrorKind kind, Vertex vertex, const std::string& what)
      : std::runtime_error(what), kind_(kind), vertex_(vertex) {}

  GameErrorKind kind() const noexcept { return kind_; }
  Vertex vertex() const noexcept { return vertex_; }

 private:
  GameErrorKind kind_;
  Vertex vertex_;
};

/**
 * A parity game on vertices 0..n-1. Immutable after construction; successor
 * lists are stored in CSR form with duplicates removed (first occurrence
 * order is kept).
 */
class ParityGame {
 public:
  ParityGame() = default;

  std::size_t vertex_count() const noexcept { return owner_.size(); }
  std::size_t edge_count() const noexcept { return targets_.size(); }

  /// Number of priorities c, i.e. one more than the largest priority.
  Priority priority_count() const noexcept { return priority_count_; }

  Player owner(Vertex v) const { return owner_[v]; }
  Priority priority(Vertex v) const { return priority_[v]; }

  std::span<const Vertex> successors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  bool has_names() const noexcept { return !names_.empty(); }
  /// Empty string when the vertex carries no label.
  const std::string& name(Vertex v) const;

  /// Vertices with priority exactly `p`.
  VertexList vertices_with_priority(Priority p) const;
  std::size_t priority_size(Priority p) const;

  const std::vector<Player>& owners() const noexcept { return owner_; }
  const std::vector<Priority>& priorities() const noexcept { return priority_; }
  std::vector<VertexList> successor_lists() const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  friend bool operator==(const ParityGame&, const ParityGame&) = default;

 private:
  friend ParityGame build_game(std::vector<Player>, std::vector<Priority>,
                               const std::vector<VertexList>&,
                               std::vector<std::string>,
                               std::optional<Priority>);

  std::vector<Player> owner_;
  std::vector<Priority> priority_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<std::string> names_;
  Priority priority_count_ = 0;
};

/**
 * Validates and builds a game. Rejects vertices without successors, edges to
 * unknown ids and (when `priority_limit` is given) priorities >= the limit.
 * Names are optional; when present there must be one per vertex.
 */
ParityGame build_game(std::vector<Player> owners, std::vector<Priority> priorities,
                      const std::vector<VertexList>& successors,
                      std::vector<std::string> names = {},
                      std::optional<Priority> priority_limit = std::nullopt);

/// Adds a self-loop to every vertex that has no successor.
std::vector<VertexList> add_self_loops(std::vector<VertexList> successors);

struct NormalizedGame {
  ParityGame game;
  /// old priority -> new priority; kUnusedPriority for levels nobody uses.
  std::vector<Priority> remap;
};

/**
 * Removes empty priority levels above 0 by repeatedly lowering all priorities
 * above an empty level by two. Parity and relative order are preserved.
 */
NormalizedGame normalize_priorities(const ParityGame& game);

bool is_normalized(const ParityGame& game);

/// Adds one to every priority and flips every owner.
ParityGame swap_roles_increment(const ParityGame& game);

struct Subgame {
  ParityGame game;
  /// subgame id -> id in the parent game
  VertexList to_parent;
};

/// Induced game on `vertices` (any order, duplicates ignored).
/// Throws GameError(NotClosed) if a vertex keeps no successor inside.
Subgame subgame(const ParityGame& game, std::span<const Vertex> vertices);

/// Sorted list of all vertices 0..n-1.
VertexList all_vertices(const ParityGame& game);

}  // namespace symparity
