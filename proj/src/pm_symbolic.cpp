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

#include "symparity/pm_symbolic.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>

#include "symparity/explicit_pm.hpp"

namespace symparity {

// ----------------------------------------------------------------- GameView

GameView::GameView(SymbolicGame& sg, const VertexSet* mask, bool swapped)
    : sg_(sg), masked_(mask != nullptr), swapped_(swapped) {
  mask_ = mask ? *mask : sg.all();
  const Priority c_game = sg.priority_count();
  const Priority shift = swapped ? 1 : 0;
  if (sg.vertex_count() == 0) return;
  p_.reserve(c_game + shift);
  if (swapped) p_.push_back(sg.empty());
  for (Priority q = 0; q < c_game; ++q) {
    p_.push_back(masked_ ? sg.intersect(sg.priority_set(q), mask_) : sg.priority_set(q));
  }
  if (masked_) {
    while (!p_.empty() && sg.is_empty(p_.back())) p_.pop_back();
  }
  above_.resize(p_.size());
  if (!p_.empty()) {
    above_.back() = sg.empty();
    for (Priority ell = priority_count() - 1; ell-- > 0;) {
      above_[ell] = sg.unite(above_[ell + 1], p_[ell + 1]);
    }
  }
}

VertexSet GameView::cpre(Player view_player, const VertexSet& b) {
  return sg_.cpre(real(view_player), b, masked_ ? &mask_ : nullptr);
}

std::vector<std::uint32_t> GameView::slot_counts() {
  std::vector<std::uint32_t> out(priority_count() / 2, 0);
  for (std::size_t s = 0; s < out.size(); ++s) {
    out[s] = static_cast<std::uint32_t>(sg_.count(p_[2 * s + 1]));
  }
  return out;
}

Subgame GameView::explicit_game() const {
  const VertexList members = sg_.members(mask_);
  Subgame sub = subgame(sg_.game(), members);
  if (swapped_) sub.game = swap_roles_increment(sub.game);
  return sub;
}

// --------------------------------------------------------- LinearSpaceState

LinearSpaceState::LinearSpaceState(SymbolicGame& sg, const VertexSet& mask, RankDomain domain)
    : RankState(sg, mask, std::move(domain)) {
  const std::size_t k = domain_.slots();
  c_.resize(k);
  hi_.assign(k, 0);
  for (std::size_t s = 0; s < k; ++s) {
    c_[s].resize(static_cast<std::size_t>(domain_.slot_cap(s)) + 1);
    c_[s][0] = mask_;
  }
  top_ = sg_.empty();
}

const VertexSet* LinearSpaceState::coordinate(std::size_t slot, std::uint32_t x) const {
  if (slot >= c_.size() || x >= c_[slot].size() || !c_[slot][x].valid()) return nullptr;
  return &c_[slot][x];
}

void LinearSpaceState::assign(std::size_t slot, std::uint32_t x, VertexSet set) {
  c_.at(slot).at(x) = std::move(set);
  hi_[slot] = std::max(hi_[slot], x);
}

void LinearSpaceState::assign_top(VertexSet set) { top_ = std::move(set); }

VertexSet LinearSpaceState::reconstruct(const Rank& r) {
  if (r.is_top()) return top_;
  if (r.is_zero()) return mask_;

  VertexSet result = top_;
  VertexSet running;  // invalid means "no constraint yet"
  bool running_empty = false;
  for (std::size_t s = c_.size(); s-- > 0;) {
    const std::uint32_t rs = r.slot(s);
    VertexSet above;
    for (std::uint32_t x = rs + 1; x <= hi_[s]; ++x) {
      if (!c_[s][x].valid()) continue;
      if (above.valid()) {
        sg_.unite_in(above, c_[s][x]);
      } else {
        above = c_[s][x];
      }
    }
    if (above.valid()) {
      if (running.valid()) sg_.intersect_in(above, running);
      sg_.unite_in(result, above);
    }
    if (rs > hi_[s] || !c_[s][rs].valid()) {
      running_empty = true;
      break;
    }
    if (running.valid()) {
      sg_.intersect_in(running, c_[s][rs]);
    } else {
      running = c_[s][rs];
    }
  }
  if (!running_empty && running.valid()) sg_.unite_in(result, running);
  return result;
}

void LinearSpaceState::commit(const Rank& r, const VertexSet& s_old, const VertexSet& s_new,
                              const Rank& /*r_prime*/) {
  VertexSet diff = sg_.subtract(s_new, s_old);
  if (sg_.is_empty(diff)) return;
  if (r.is_top()) {
    for (auto& row : c_) {
      for (auto& cx : row) {
        if (cx.valid()) sg_.subtract_in(cx, diff);
      }
    }
    sg_.unite_in(top_, diff);
    return;
  }
  for (std::size_t s = 0; s < c_.size(); ++s) {
    const std::uint32_t rs = r.slot(s);
    for (std::uint32_t x = 0; x <= hi_[s]; ++x) {
      if (x == rs || !c_[s][x].valid()) continue;
      sg_.subtract_in(c_[s][x], diff);
    }
    if (c_[s][rs].valid()) {
      sg_.unite_in(c_[s][rs], diff);
    } else {
      c_[s][rs] = diff;
      hi_[s] = std::max(hi_[s], rs);
    }
  }
}

Rank LinearSpaceState::rank_of(Vertex v) {
  if (sg_.contains(top_, v)) return domain_.top();
  std::vector<std::uint32_t> x(c_.size(), 0);
  for (std::size_t s = 0; s < c_.size(); ++s) {
    for (std::uint32_t val = 0; val <= hi_[s]; ++val) {
      if (c_[s][val].valid() && sg_.contains(c_[s][val], v)) {
        x[s] = val;
        break;
      }
    }
  }
  return Rank(std::move(x));
}

bool LinearSpaceState::check_structure() {
  for (std::size_t s = 0; s < c_.size(); ++s) {
    VertexSet seen = top_;
    for (std::uint32_t x = 0; x <= hi_[s]; ++x) {
      if (!c_[s][x].valid()) continue;
      if (!sg_.is_empty(sg_.intersect(seen, c_[s][x]))) return false;
      sg_.unite_in(seen, c_[s][x]);
    }
    if (!sg_.equal(seen, mask_)) return false;
  }
  return true;
}

// -------------------------------------------------------- DirectFamilyState

DirectFamilyState::DirectFamilyState(SymbolicGame& sg, const VertexSet& mask, RankDomain domain)
    : RankState(sg, mask, std::move(domain)) {
  if (domain_.size() > kMaxRanks) {
    throw std::length_error("rank domain too large for one set per rank");
  }
  top_ = sg_.empty();
}

VertexSet DirectFamilyState::at_least(const Rank& r) {
  if (r.is_top()) return top_;
  if (r.is_zero()) return mask_;
  auto it = sets_.find(r);
  return it == sets_.end() ? sg_.empty() : it->second;
}

void DirectFamilyState::commit(const Rank& r, const VertexSet& /*s_old*/, const VertexSet& s_new,
                               const Rank& r_prime) {
  if (r.is_top()) {
    top_ = s_new;
  } else {
    sets_[r] = s_new;
  }
  for (Rank x = domain_.decr(r); x > r_prime; x = domain_.decr(x)) {
    auto it = sets_.find(x);
    if (it == sets_.end()) {
      sets_.emplace(x, s_new);
    } else {
      sg_.unite_in(it->second, s_new);
    }
  }
}

Rank DirectFamilyState::rank_of(Vertex v) {
  if (sg_.contains(top_, v)) return domain_.top();
  Rank best = domain_.zero();
  for (const auto& [r, set] : sets_) {
    if (r > best && sg_.contains(set, v)) best = r;
  }
  return best;
}

bool DirectFamilyState::check_structure() {
  const auto ranks = domain_.enumerate();
  for (std::size_t i = 0; i + 1 < ranks.size(); ++i) {
    if (!sg_.subset(at_least(ranks[i + 1]), at_least(ranks[i]))) return false;
  }
  return true;
}

// ---------------------------------------------------------------- algorithm

namespace {

std::unique_ptr<RankState> make_state(RankRepresentation rep, SymbolicGame& sg,
                                      const VertexSet& mask, const RankDomain& domain) {
  if (rep == RankRepresentation::DirectFamily) {
    return std::make_unique<DirectFamilyState>(sg, mask, domain);
  }
  return std::make_unique<LinearSpaceState>(sg, mask, domain);
}

std::uint64_t iteration_guard(std::size_t n, const RankDomain& domain) {
  try {
    const std::uint64_t size = domain.size();
    const unsigned __int128 g = static_cast<unsigned __int128>(n) * size + size;
    return g > ~std::uint64_t{0} ? ~std::uint64_t{0} : static_cast<std::uint64_t>(g);
  } catch (const std::overflow_error&) {
    return ~std::uint64_t{0};
  }
}

// Invariant checks against the explicit oracle; all counted work is undone.
class InvariantChecker {
 public:
  InvariantChecker(GameView& view, const RankDomain& domain)
      : view_(view), domain_(domain), sub_(view.explicit_game()) {
    oracle_ = solve_explicit_pm(sub_.game, domain_).rho;
  }

  // r is the rank just processed, next the value the loop continues with (r
  // itself after the final iteration). Closure at r only holds when the
  // iteration did not roll back; afterwards every vertex either lifts to at
  // least `next` or is stable.
  void check(RankState& state, const Rank& r, const Rank& next, bool rolled_back,
             std::vector<std::string>& violations) {
    SymbolicGame& sg = view_.symbolic();
    CounterSnapshot snapshot(sg);
    const std::string where = " at r=" + r.to_string();
    if (!state.check_structure()) violations.push_back("anti-monotonicity" + where);

    RankingFunction rho(sub_.to_parent.size());
    for (Vertex i = 0; i < rho.size(); ++i) rho[i] = state.rank_of(sub_.to_parent[i]);
    for (Vertex i = 0; i < rho.size(); ++i) {
      if (rho[i] > oracle_[i]) {
        violations.push_back("lower bound at vertex " + std::to_string(sub_.to_parent[i]) + where);
      }
      const Rank lifted = lifted_value(sub_.game, domain_, rho, i);
      if (!rolled_back && lifted == r && rho[i] < r) {
        violations.push_back("closure at vertex " + std::to_string(sub_.to_parent[i]) + where);
      }
      if (lifted < next && lifted != rho[i]) {
        violations.push_back("unstable vertex " + std::to_string(sub_.to_parent[i]) + where);
      }
    }
  }

 private:
  GameView& view_;
  const RankDomain& domain_;
  Subgame sub_;
  RankingFunction oracle_;
};

// Index of the lowest nonzero counter, as a priority.
Priority lowest_nonzero(const Rank& r) {
  for (std::size_t s = 0; s < r.slots(); ++s) {
    if (r.slot(s) != 0) return static_cast<Priority>(2 * s + 1);
  }
  return 0;
}

}  // namespace

PmRun symbolic_parity_dominion(SymbolicGame& sg, const VertexSet* mask, bool swapped,
                               std::optional<std::uint32_t> bound, const PmOptions& options) {
  PmRun run;
  run.view = std::make_unique<GameView>(sg, mask, swapped);
  GameView& view = *run.view;
  const Priority c = view.priority_count();
  run.domain = RankDomain(c, view.slot_counts(), bound);
  const RankDomain& dom = run.domain;
  run.state = make_state(options.representation, sg, view.mask(), dom);
  RankState& state = *run.state;

  std::optional<InvariantChecker> checker;
  if (options.check_invariants) {
    CounterSnapshot snapshot(sg);
    checker.emplace(view, dom);
  }

  const std::size_t n_view = sg.members(view.mask()).size();
  const std::uint64_t guard = iteration_guard(n_view, dom);
  std::uint64_t iterations = 0;

  Rank r = dom.incr(dom.zero());
  while (true) {
    if (++iterations > guard) throw std::logic_error("progress-measure loop exceeded its bound");

    const VertexSet s_old = state.at_least(r);
    VertexSet s = s_old;
    if (!r.is_top()) {
      const Priority ell = lowest_nonzero(r);
      for (Priority i = 1; i <= ell; i += 2) {
        VertexSet seed = view.cpre(Player::Odd, state.at_least(dom.decr_ell(r, i)));
        sg.intersect_in(seed, view.priority_set(i));
        sg.unite_in(s, seed);
      }
      while (true) {
        VertexSet step = view.cpre(Player::Odd, s);
        sg.subtract_in(step, view.above(ell));
        if (sg.subset(step, s)) break;
        sg.unite_in(s, step);
      }
    } else {
      for (Priority i = 1; i < c; i += 2) {
        VertexSet seed = view.cpre(Player::Odd, state.at_least(dom.decr_ell(r, i)));
        sg.intersect_in(seed, view.priority_set(i));
        sg.unite_in(s, seed);
      }
      while (true) {
        VertexSet step = view.cpre(Player::Odd, s);
        if (sg.subset(step, s)) break;
        sg.unite_in(s, step);
      }
    }

    // Walk down until a set already holds everything in S_r; the sets passed
    // on the way gain S_r when the new ranks are committed.
    const Rank below = dom.decr(r);
    Rank r_prime = below;
    while (!r_prime.is_zero() && !sg.subset(s, state.at_least(r_prime))) {
      r_prime = dom.decr(r_prime);
    }
    const bool rolled_back = r_prime != below;
    const Rank next = rolled_back ? dom.incr(r_prime) : (r.is_top() ? r : dom.incr(r));

    PmIteration it{r, next, 0, 0};
    if (options.trace) {
      it.size = sg.members(s).size();
      it.added = it.size - sg.members(s_old).size();
    }
    state.commit(r, s_old, s, r_prime);

    if (checker) checker->check(state, r, next, rolled_back, run.violations);
    if (options.trace) {
      *options.trace << "step " << run.steps.size() + 1 << ": r=" << r.to_string()
                     << " |S_r|=" << it.size << " added=" << it.added
                     << " next=" << (r.is_top() && !rolled_back ? "done" : next.to_string())
                     << " cpre=" << sg.counters().cpre_ops << '\n';
    }
    run.steps.push_back(std::move(it));

    if (r.is_top() && !rolled_back) break;
    r = next;
  }

  run.winning = sg.subtract(view.mask(), state.top_set());
  return run;
}

DominionResult dominion(SymbolicGame& sg, const VertexSet* mask, Player player, std::uint32_t h,
                        const PmOptions& options, bool want_strategy) {
  PmRun run = symbolic_parity_dominion(sg, mask, player == Player::Odd, h, options);
  DominionResult out;
  if (want_strategy) out.strategy = extract_strategy_from_pm(run);
  out.dominion = std::move(run.winning);
  out.violations = std::move(run.violations);
  return out;
}

Strategy extract_strategy_from_pm(PmRun& run) {
  GameView& view = *run.view;
  SymbolicGame& sg = view.symbolic();
  RankState& state = *run.state;
  const RankDomain& dom = run.domain;
  Strategy sigma(view.real(Player::Even), sg.vertex_count());

  const VertexSet& w = run.winning;
  const VertexSet& even_owned = view.owned_by(Player::Even);
  VertexSet covered = sg.empty();
  for (Vertex v : sg.members(w)) {
    const Rank rv = state.rank_of(v);
    VertexSet preds = view.cpre(Player::Even, sg.singleton(v));
    sg.intersect_in(preds, even_owned);
    sg.intersect_in(preds, w);
    sg.subtract_in(preds, covered);
    if (sg.is_empty(preds)) continue;
    for (Priority ell = 0; ell < view.priority_count(); ++ell) {
      VertexSet pick = sg.intersect(preds, view.priority_set(ell));
      if (sg.is_empty(pick)) continue;
      sg.intersect_in(pick, state.at_least(dom.incr_ell(rv, ell)));
      for (Vertex u : sg.members(pick)) sigma.choice[u] = v;
      sg.unite_in(covered, pick);
      sg.subtract_in(preds, pick);
    }
  }

  VertexSet missing = sg.intersect(w, even_owned);
  sg.subtract_in(missing, covered);
  if (!sg.is_empty(missing)) throw IncompleteStrategy(sg.members(missing).front());
  return sigma;
}

SolveReport solve_pm_symbolic(const ParityGame& game, const SolveOptions& options,
                              RankRepresentation representation) {
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  report.algorithm = "pm";
  const ParityGame g = normalize_priorities(game).game;
  SymbolicGame sg(g, options.backend, options.kernel);
  sg.begin_run();

  PmOptions pm;
  pm.representation = representation;
  pm.check_invariants = options.check_invariants;
  pm.trace = options.trace;
  {
    PmRun run = symbolic_parity_dominion(sg, nullptr, false, std::nullopt, pm);
    report.winning_even = sg.members(run.winning);
    report.diagnostics["iterations"] = static_cast<std::int64_t>(run.steps.size());
    report.diagnostics["invariant_violations"] = static_cast<std::int64_t>(run.violations.size());
    if (options.strategies) report.strategy_even = extract_strategy_from_pm(run);
  }
  if (options.strategies) {
    PmOptions swapped = pm;
    swapped.trace = nullptr;
    PmRun run = symbolic_parity_dominion(sg, nullptr, true, std::nullopt, swapped);
    report.strategy_odd = extract_strategy_from_pm(run);
  }
  {
    std::vector<bool> even(g.vertex_count(), false);
    for (Vertex v : report.winning_even) even[v] = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!even[v]) report.winning_odd.push_back(v);
    }
  }
  report.counters = sg.counters();
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace symparity
