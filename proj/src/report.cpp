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

#include "symparity/report.hpp"

#include <algorithm>

#include "symparity/explicit_pm.hpp"

namespace symparity {

bool SolveReport::is_partition(std::size_t n) const {
  if (!std::is_sorted(winning_even.begin(), winning_even.end()) ||
      !std::is_sorted(winning_odd.begin(), winning_odd.end())) {
    return false;
  }
  if (winning_even.size() + winning_odd.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (const auto* set : {&winning_even, &winning_odd}) {
    for (Vertex v : *set) {
      if (v >= n || seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

namespace {

// Each owned vertex of the winning set moves to its lowest-ranked successor
// (lowest id on ties); this keeps the measure's progress condition.
Strategy strategy_from_ranks(const ParityGame& g, const RankingFunction& rho, Player real) {
  Strategy s(real, g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (rho[v].is_top() || g.owner(v) != Player::Even) continue;
    Vertex pick = kNoVertex;
    for (Vertex w : g.successors(v)) {
      if (pick == kNoVertex || rho[w] < rho[pick] || (rho[w] == rho[pick] && w < pick)) pick = w;
    }
    s.choice[v] = pick;
  }
  return s;
}

}  // namespace

SolveReport solve_explicit(const ParityGame& game, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  report.algorithm = "explicit";
  const ParityGame g = normalize_priorities(game).game;
  const ExplicitPmResult even = solve_explicit_pm(g, RankDomain::for_game(g));
  report.winning_even = even.winning_even;
  std::vector<bool> in(g.vertex_count(), false);
  for (Vertex v : report.winning_even) in[v] = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in[v]) report.winning_odd.push_back(v);
  }
  report.diagnostics["lifts"] = static_cast<std::int64_t>(even.lifts);
  if (options.strategies) {
    report.strategy_even = strategy_from_ranks(g, even.rho, Player::Even);
    const ParityGame swapped = normalize_priorities(swap_roles_increment(g)).game;
    const ExplicitPmResult odd = solve_explicit_pm(swapped, RankDomain::for_game(swapped));
    report.strategy_odd = strategy_from_ranks(swapped, odd.rho, Player::Odd);
  }
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace symparity
