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

#include "symparity/game.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace symparity {

const char* to_string(Player p) noexcept {
  return p == Player::Even ? "even" : "odd";
}

namespace {

// Priorities beyond this are almost certainly corrupt input and would blow up
// every per-priority table downstream.
constexpr Priority kPriorityCeiling = Priority{1} << 24;

const std::string kEmptyName;

}  // namespace

const std::string& ParityGame::name(Vertex v) const {
  return names_.empty() ? kEmptyName : names_[v];
}

VertexList ParityGame::vertices_with_priority(Priority p) const {
  VertexList out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (priority_[v] == p) out.push_back(v);
  }
  return out;
}

std::size_t ParityGame::priority_size(Priority p) const {
  return static_cast<std::size_t>(std::count(priority_.begin(), priority_.end(), p));
}

std::vector<VertexList> ParityGame::successor_lists() const {
  std::vector<VertexList> out(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v) {
    auto succ = successors(v);
    out[v].assign(succ.begin(), succ.end());
  }
  return out;
}

ParityGame build_game(std::vector<Player> owners, std::vector<Priority> priorities,
                      const std::vector<VertexList>& successors,
                      std::vector<std::string> names,
                      std::optional<Priority> priority_limit) {
  const std::size_t n = owners.size();
  if (priorities.size() != n || successors.size() != n) {
    throw std::invalid_argument("build_game: owners, priorities and successors differ in length");
  }
  if (!names.empty() && names.size() != n) {
    throw std::invalid_argument("build_game: names must be empty or one per vertex");
  }
  if (n > std::numeric_limits<Vertex>::max() - 1) {
    throw std::invalid_argument("build_game: too many vertices");
  }

  ParityGame g;
  g.owner_ = std::move(owners);
  g.priority_ = std::move(priorities);
  g.names_ = std::move(names);
  g.offsets_.assign(1, 0);
  g.offsets_.reserve(n + 1);

  const Priority limit = priority_limit.value_or(kPriorityCeiling);
  Priority max_priority = 0;
  std::vector<Vertex> seen_stamp(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (g.priority_[v] >= limit) {
      throw GameError(GameErrorKind::PriorityOutOfRange, v,
                      "vertex " + std::to_string(v) + " has priority " +
                          std::to_string(g.priority_[v]) + " outside [0, " +
                          std::to_string(limit - 1) + "]");
    }
    max_priority = std::max(max_priority, g.priority_[v]);
    if (successors[v].empty()) {
      throw GameError(GameErrorKind::VertexWithoutSuccessor, v,
                      "vertex " + std::to_string(v) + " has no successor");
    }
    for (Vertex w : successors[v]) {
      if (w >= n) {
        throw GameError(GameErrorKind::DanglingEdge, v,
                        "vertex " + std::to_string(v) + " has an edge to unknown vertex " +
                            std::to_string(w));
      }
      if (seen_stamp[w] == v) continue;
      seen_stamp[w] = v;
      g.targets_.push_back(w);
    }
    g.offsets_.push_back(g.targets_.size());
  }
  g.priority_count_ = n == 0 ? 0 : max_priority + 1;
  return g;
}

std::vector<VertexList> add_self_loops(std::vector<VertexList> successors) {
  for (std::size_t v = 0; v < successors.size(); ++v) {
    if (successors[v].empty()) successors[v].push_back(static_cast<Vertex>(v));
  }
  return successors;
}

NormalizedGame normalize_priorities(const ParityGame& game) {
  const Priority c = game.priority_count();
  std::vector<bool> present(c, false);
  for (Priority p : game.priorities()) present[p] = true;

  // Walking the used levels upwards: a level of the same parity as the last
  // kept one merges into it, otherwise it becomes the next level. This is the
  // "-2 shift above an empty level" rule applied until no level 0 < i < c' is
  // empty.
  NormalizedGame out;
  out.remap.assign(c, kUnusedPriority);
  std::optional<Priority> last;
  for (Priority p = 0; p < c; ++p) {
    if (!present[p]) continue;
    Priority mapped;
    if (!last) {
      mapped = p & 1U;
    } else if ((*last & 1U) == (p & 1U)) {
      mapped = *last;
    } else {
      mapped = *last + 1;
    }
    out.remap[p] = mapped;
    last = mapped;
  }

  std::vector<Priority> priorities(game.priorities());
  for (auto& p : priorities) p = out.remap[p];
  out.game = build_game(game.owners(), std::move(priorities), game.successor_lists(),
                        game.names());
  return out;
}

bool is_normalized(const ParityGame& game) {
  const Priority c = game.priority_count();
  std::vector<bool> present(c, false);
  for (Priority p : game.priorities()) present[p] = true;
  for (Priority i = 1; i < c; ++i) {
    if (!present[i]) return false;
  }
  return true;
}

ParityGame swap_roles_increment(const ParityGame& game) {
  std::vector<Player> owners(game.owners());
  for (auto& p : owners) p = opponent(p);
  std::vector<Priority> priorities(game.priorities());
  for (auto& p : priorities) ++p;
  return build_game(std::move(owners), std::move(priorities), game.successor_lists(),
                    game.names());
}

Subgame subgame(const ParityGame& game, std::span<const Vertex> vertices) {
  const std::size_t n = game.vertex_count();
  std::vector<Vertex> local(n, kNoVertex);
  Subgame out;
  for (Vertex v : vertices) {
    if (v >= n) throw std::out_of_range("subgame: vertex id out of range");
    if (local[v] != kNoVertex) continue;
    local[v] = 0;
    out.to_parent.push_back(v);
  }
  std::sort(out.to_parent.begin(), out.to_parent.end());
  for (Vertex i = 0; i < out.to_parent.size(); ++i) local[out.to_parent[i]] = i;

  const std::size_t k = out.to_parent.size();
  std::vector<Player> owners(k);
  std::vector<Priority> priorities(k);
  std::vector<VertexList> succ(k);
  std::vector<std::string> names;
  if (game.has_names()) names.resize(k);
  for (Vertex i = 0; i < k; ++i) {
    const Vertex v = out.to_parent[i];
    owners[i] = game.owner(v);
    priorities[i] = game.priority(v);
    if (game.has_names()) names[i] = game.name(v);
    for (Vertex w : game.successors(v)) {
      if (local[w] != kNoVertex) succ[i].push_back(local[w]);
    }
    if (succ[i].empty()) {
      throw GameError(GameErrorKind::NotClosed, v,
                      "vertex " + std::to_string(v) + " has no successor inside the subgame");
    }
  }
  out.game = build_game(std::move(owners), std::move(priorities), succ, std::move(names));
  return out;
}

VertexList all_vertices(const ParityGame& game) {
  VertexList out(game.vertex_count());
  std::iota(out.begin(), out.end(), Vertex{0});
  return out;
}

}  // namespace symparity
