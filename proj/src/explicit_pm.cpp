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

#include "symparity/explicit_pm.hpp"

#include <algorithm>
#include <deque>

namespace symparity {

Rank best(const ParityGame& game, const RankingFunction& rho, Vertex v) {
  auto succ = game.successors(v);
  const Rank* pick = &rho[succ.front()];
  const bool even = game.owner(v) == Player::Even;
  for (Vertex w : succ.subspan(1)) {
    if (even ? rho[w] < *pick : rho[w] > *pick) pick = &rho[w];
  }
  return *pick;
}

Rank lifted_value(const ParityGame& game, const RankDomain& domain, const RankingFunction& rho,
                  Vertex v) {
  return domain.incr_ell(best(game, rho, v), game.priority(v));
}

RankingFunction lift(const ParityGame& game, const RankDomain& domain, RankingFunction rho,
                     Vertex v) {
  Rank next = lifted_value(game, domain, rho, v);
  if (next > rho[v]) rho[v] = std::move(next);
  return rho;
}

ExplicitPmResult solve_explicit_pm(const ParityGame& game, const RankDomain& domain,
                                   const std::vector<Vertex>* order) {
  const std::size_t n = game.vertex_count();
  std::vector<VertexList> preds(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : game.successors(v)) preds[w].push_back(v);
  }

  ExplicitPmResult out;
  out.rho.assign(n, domain.zero());
  std::deque<Vertex> queue;
  std::vector<bool> queued(n, true);
  if (order) {
    queue.assign(order->begin(), order->end());
  } else {
    for (Vertex v = 0; v < n; ++v) queue.push_back(v);
  }

  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    queued[v] = false;
    if (out.rho[v].is_top()) continue;
    Rank next = lifted_value(game, domain, out.rho, v);
    if (next <= out.rho[v]) continue;
    out.rho[v] = std::move(next);
    ++out.lifts;
    for (Vertex u : preds[v]) {
      if (!queued[u]) {
        queued[u] = true;
        queue.push_back(u);
      }
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (!out.rho[v].is_top()) out.winning_even.push_back(v);
  }
  return out;
}

VertexList explicit_winning_even(const ParityGame& game) {
  if (game.vertex_count() == 0) return {};
  const ParityGame g = normalize_priorities(game).game;
  return solve_explicit_pm(g, RankDomain::for_game(g)).winning_even;
}

VertexList explicit_winning(const ParityGame& game, Player player) {
  if (player == Player::Even) return explicit_winning_even(game);
  return explicit_winning_even(swap_roles_increment(game));
}

bool is_dominion(const ParityGame& game, Player player, const VertexList& d) {
  if (d.empty()) return false;
  std::vector<bool> in(game.vertex_count(), false);
  for (Vertex v : d) in[v] = true;
  for (Vertex v : d) {
    auto succ = game.successors(v);
    const bool some_inside = std::any_of(succ.begin(), succ.end(), [&](Vertex w) { return in[w]; });
    const bool all_inside = std::all_of(succ.begin(), succ.end(), [&](Vertex w) { return in[w]; });
    if (game.owner(v) == player ? !some_inside : !all_inside) return false;
  }
  const Subgame sub = subgame(game, d);
  return explicit_winning(sub.game, player).size() == d.size();
}

std::vector<std::vector<Vertex>> enumerate_dominions_bruteforce(const ParityGame& game,
                                                                Player player,
                                                                std::size_t max_size) {
  const std::size_t n = game.vertex_count();
  std::vector<VertexList> out;
  max_size = std::min(max_size, n);
  for (std::size_t k = 1; k <= max_size; ++k) {
    // walk all k-subsets in lexicographic order
    std::vector<Vertex> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
      if (is_dominion(game, player, pick)) out.push_back(pick);
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace symparity
