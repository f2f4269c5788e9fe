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

#include "recursion.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "symparity/attractor.hpp"
#include "symparity/explicit_pm.hpp"
#include "symparity/pm_symbolic.hpp"

namespace symparity::detail {
namespace {

struct WinPair {
  VertexSet even;
  VertexSet odd;

  VertexSet& of(Player p) { return p == Player::Even ? even : odd; }
};

class Recursion {
 public:
  Recursion(SymbolicGame& sg, const SolveOptions& options, const BigStepPolicy* policy,
            SolveReport& report)
      : sg_(sg), options_(options), policy_(policy), report_(report) {
    if (options_.strategies) {
      sigma_[0].assign(sg.vertex_count(), kNoVertex);
      sigma_[1].assign(sg.vertex_count(), kNoVertex);
    }
    n0_ = sg.vertex_count();
  }

  WinPair solve(VertexSet m, std::uint32_t depth) {
    if (depth > sg_.priority_count() + 1) throw std::logic_error("recursion deeper than c levels");
    if (sg_.is_empty(m)) return {std::move(m), sg_.empty()};

    // Highest priority present in m.
    Priority d = sg_.priority_count();
    VertexSet top;
    while (d-- > 0) {
      top = sg_.intersect(sg_.priority_set(d), m);
      if (!sg_.is_empty(top)) break;
    }
    if (d == 0) {
      if (sigma_enabled()) pick_inside(Player::Even, m, m);
      return {std::move(m), sg_.empty()};
    }

    const Player pl = favoured_by(d);
    const Player op = opponent(pl);
    const bool dominion_step = policy_ && d + 1 > 2;
    std::uint32_t h = 0;
    std::size_t n_level = 0;
    if (dominion_step) {
      n_level = sg_.count(m);
      h = choose_h(*policy_, n0_, n_level, d + 1);
    }

    VertexSet g = std::move(m);
    VertexSet w_op = sg_.empty();
    std::int64_t rounds = 0;
    std::size_t short_rounds = 0;
    while (true) {
      ++rounds;
      const std::size_t before = dominion_step ? sg_.members(g).size() : 0;
      if (dominion_step) peel_dominion(g, w_op, op, h);

      sg_.intersect_in(top, g);
      VertexSet sub;
      {
        AttractorResult a = attractor(sg_, pl, top, &g, false, sigma_ptr(pl));
        sub = sg_.subtract(g, a.attractor);
      }
      WinPair inner = solve(std::move(sub), depth + 1);
      VertexSet lost = std::move(inner.of(op));
      inner = WinPair{};
      if (sg_.is_empty(lost)) break;

      AttractorResult a = attractor(sg_, op, lost, &g, false, sigma_ptr(op));
      lost = VertexSet();
      sg_.unite_in(w_op, a.attractor);
      sg_.subtract_in(g, a.attractor);
      if (dominion_step) {
        const std::size_t removed = before - sg_.members(g).size();
        if (removed < static_cast<std::size_t>(h) + 2) ++short_rounds;
      }
    }

    auto& diag = report_.diagnostics;
    diag["iterations"] += rounds;
    diag["max_level_iterations"] = std::max(diag["max_level_iterations"], rounds);
    if (dominion_step) {
      diag["removal_bound_violations"] += static_cast<std::int64_t>(short_rounds);
      const std::size_t bound = n_level / (static_cast<std::size_t>(h) + 2) + 1;
      if (static_cast<std::size_t>(rounds) > bound) ++diag["iteration_bound_violations"];
    }

    if (sigma_enabled()) pick_inside(pl, top, g);
    WinPair out;
    out.of(pl) = std::move(g);
    out.of(op) = std::move(w_op);
    return out;
  }

  Strategy strategy(Player p) {
    Strategy s(p, sg_.vertex_count());
    s.choice = sigma_[p == Player::Even ? 0 : 1];
    return s;
  }

 private:
  bool sigma_enabled() const { return options_.strategies; }

  std::vector<Vertex>* sigma_ptr(Player p) {
    return sigma_enabled() ? &sigma_[p == Player::Even ? 0 : 1] : nullptr;
  }

  // Player-owned vertices of `from` choose their lowest-id successor in `inside`.
  void pick_inside(Player p, const VertexSet& from, const VertexSet& inside) {
    auto& sigma = sigma_[p == Player::Even ? 0 : 1];
    VertexSet owned = sg_.intersect(from, sg_.owned_by(p));
    for (Vertex v : sg_.members(owned)) {
      for (Vertex w : sg_.game().successors(v)) {
        if (sg_.contains(inside, w)) {
          sigma[v] = w;
          break;
        }
      }
    }
  }

  void peel_dominion(VertexSet& g, VertexSet& w_op, Player op, std::uint32_t h) {
    PmOptions pm;
    pm.check_invariants = options_.check_invariants;
    DominionResult found = dominion(sg_, &g, op, h, pm, sigma_enabled());
    auto& diag = report_.diagnostics;
    ++diag["dominion_calls"];
    diag["invariant_violations"] += static_cast<std::int64_t>(found.violations.size());
    if (sg_.is_empty(found.dominion)) return;

    if (options_.check_invariants) {
      CounterSnapshot snapshot(sg_);
      // a dominion of the current subgame, so checked inside it
      const Subgame sub = subgame(sg_.game(), sg_.members(g));
      std::vector<Vertex> local(sg_.vertex_count(), kNoVertex);
      for (Vertex i = 0; i < sub.to_parent.size(); ++i) local[sub.to_parent[i]] = i;
      VertexList d;
      for (Vertex v : sg_.members(found.dominion)) d.push_back(local[v]);
      std::sort(d.begin(), d.end());
      if (!is_dominion(sub.game, op, d)) {
        ++diag["invalid_dominions"];
      }
    }
    diag["dominion_vertices"] += static_cast<std::int64_t>(sg_.members(found.dominion).size());
    if (found.strategy) {
      auto& sigma = sigma_[op == Player::Even ? 0 : 1];
      for (Vertex v : found.strategy->domain()) sigma[v] = found.strategy->choice[v];
    }
    AttractorResult a = attractor(sg_, op, found.dominion, &g, false, sigma_ptr(op));
    found.dominion = VertexSet();
    sg_.unite_in(w_op, a.attractor);
    sg_.subtract_in(g, a.attractor);
  }

  SymbolicGame& sg_;
  const SolveOptions& options_;
  const BigStepPolicy* policy_;
  SolveReport& report_;
  std::size_t n0_ = 0;
  std::vector<Vertex> sigma_[2];
};

}  // namespace

SolveReport solve_recursive(const ParityGame& game, const SolveOptions& options,
                            const BigStepPolicy* policy, std::string algorithm) {
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  report.algorithm = std::move(algorithm);
  const ParityGame g = normalize_priorities(game).game;
  SymbolicGame sg(g, options.backend, options.kernel);
  sg.begin_run();
  for (const char* key : {"iterations", "max_level_iterations"}) report.diagnostics[key] = 0;
  if (policy) {
    for (const char* key : {"dominion_calls", "dominion_vertices", "removal_bound_violations",
                            "iteration_bound_violations", "invariant_violations"}) {
      report.diagnostics[key] = 0;
    }
  }

  Recursion rec(sg, options, policy, report);
  {
    WinPair result = rec.solve(sg.full(), 0);
    report.winning_even = sg.members(result.even);
    report.winning_odd = sg.members(result.odd);
  }
  if (options.strategies) {
    Strategy even = rec.strategy(Player::Even);
    Strategy odd = rec.strategy(Player::Odd);
    even.restrict_to(report.winning_even);
    odd.restrict_to(report.winning_odd);
    report.strategy_even = std::move(even);
    report.strategy_odd = std::move(odd);
  }
  report.counters = sg.counters();
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace symparity::detail

namespace symparity {

SolveReport classic_parity(const ParityGame& game, const SolveOptions& options) {
  return detail::solve_recursive(game, options, nullptr, "zielonka");
}

}  // namespace symparity
