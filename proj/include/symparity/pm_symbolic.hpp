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
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symparity/rank.hpp"
#include "symparity/report.hpp"
#include "symparity/strategy.hpp"
#include "symparity/vertex_set.hpp"

namespace symparity {

/**
 * The subgame on `mask`, optionally with roles swapped (every priority plus
 * one, owners flipped). Player names in the methods below are view players.
 */
class GameView {
 public:
  GameView(SymbolicGame& sg, const VertexSet* mask, bool swapped);

  SymbolicGame& symbolic() const noexcept { return sg_; }
  const VertexSet& mask() const noexcept { return mask_; }
  bool masked() const noexcept { return masked_; }
  bool swapped() const noexcept { return swapped_; }

  /// One more than the highest priority present in the view; 0 if empty.
  Priority priority_count() const noexcept { return static_cast<Priority>(p_.size()); }
  const VertexSet& priority_set(Priority i) const { return p_.at(i); }
  /// Union of the view priorities strictly above `ell`.
  const VertexSet& above(Priority ell) const { return above_.at(ell); }

  Player real(Player view_player) const noexcept {
    return swapped_ ? opponent(view_player) : view_player;
  }
  /// Input set of vertices owned by view player `p` (whole game, unmasked).
  const VertexSet& owned_by(Player p) const { return sg_.owned_by(real(p)); }

  VertexSet cpre(Player view_player, const VertexSet& b);

  /// n_i = |P_i| for the odd view priorities.
  std::vector<std::uint32_t> slot_counts();

  /// Explicit copy of the view (vertices renumbered; to_parent maps back).
  Subgame explicit_game() const;

 private:
  SymbolicGame& sg_;
  bool masked_;
  bool swapped_;
  VertexSet mask_;
  std::vector<VertexSet> p_;
  std::vector<VertexSet> above_;
};

enum class RankRepresentation { LinearSpace, DirectFamily };

/// The ranking function ρ maintained by the symbolic algorithm.
class RankState {
 public:
  virtual ~RankState() = default;

  virtual RankRepresentation representation() const = 0;
  const RankDomain& domain() const noexcept { return domain_; }

  /// S_r: vertices of rank at least r.
  virtual VertexSet at_least(const Rank& r) = 0;
  /// Vertices of s_new \ s_old get rank r. Every S_x with r_prime < x <= r
  /// gains s_new.
  virtual void commit(const Rank& r, const VertexSet& s_old, const VertexSet& s_new,
                      const Rank& r_prime) = 0;
  virtual Rank rank_of(Vertex v) = 0;
  virtual const VertexSet& top_set() const = 0;
  /// Anti-monotonicity (direct family) or the coordinate partition.
  virtual bool check_structure() = 0;

 protected:
  RankState(SymbolicGame& sg, const VertexSet& mask, RankDomain domain)
      : sg_(sg), mask_(mask), domain_(std::move(domain)) {}

  SymbolicGame& sg_;
  const VertexSet& mask_;
  RankDomain domain_;
};

/**
 * Linear-space encoding: C[s][x] holds the vertices whose counter at odd
 * priority 2s+1 equals x; top holds rank TOP. C-sets never touched are
 * absent and read as empty.
 */
class LinearSpaceState final : public RankState {
 public:
  LinearSpaceState(SymbolicGame& sg, const VertexSet& mask, RankDomain domain);

  RankRepresentation representation() const override { return RankRepresentation::LinearSpace; }
  VertexSet at_least(const Rank& r) override { return reconstruct(r); }
  VertexSet reconstruct(const Rank& r);
  void commit(const Rank& r, const VertexSet& s_old, const VertexSet& s_new,
              const Rank& r_prime) override;
  Rank rank_of(Vertex v) override;
  const VertexSet& top_set() const override { return top_; }
  bool check_structure() override;

  /// nullptr when C[slot][x] was never created.
  const VertexSet* coordinate(std::size_t slot, std::uint32_t x) const;
  /// Overwrites one coordinate set (building states by hand in tests).
  void assign(std::size_t slot, std::uint32_t x, VertexSet set);
  void assign_top(VertexSet set);

 private:
  std::vector<std::vector<VertexSet>> c_;
  std::vector<std::uint32_t> hi_;  // largest x with C[s][x] created
  VertexSet top_;
};

/// One set per rank. Only for small domains (test partner).
class DirectFamilyState final : public RankState {
 public:
  static constexpr std::uint64_t kMaxRanks = std::uint64_t{1} << 20;

  DirectFamilyState(SymbolicGame& sg, const VertexSet& mask, RankDomain domain);

  RankRepresentation representation() const override {
    return RankRepresentation::DirectFamily;
  }
  VertexSet at_least(const Rank& r) override;
  void commit(const Rank& r, const VertexSet& s_old, const VertexSet& s_new,
              const Rank& r_prime) override;
  Rank rank_of(Vertex v) override;
  const VertexSet& top_set() const override { return top_; }
  bool check_structure() override;

 private:
  std::map<Rank, VertexSet> sets_;
  VertexSet top_;
};

struct PmOptions {
  RankRepresentation representation = RankRepresentation::LinearSpace;
  bool check_invariants = false;
  std::ostream* trace = nullptr;
};

struct PmIteration {
  Rank r;
  Rank next;
  std::size_t size = 0;   // |S_r| after the iteration
  std::size_t added = 0;  // vertices that reached rank r
};

struct PmRun {
  std::unique_ptr<GameView> view;
  RankDomain domain;
  std::unique_ptr<RankState> state;
  VertexSet winning;  // mask \ S_TOP, view-Even's dominion
  std::vector<PmIteration> steps;
  std::vector<std::string> violations;
};

/**
 * Symbolic progress-measure lifting on a view. `bound` selects the bounded
 * codomain (entries summing to at most h); without it the full codomain is
 * used and the result is view-Even's winning set.
 */
PmRun symbolic_parity_dominion(SymbolicGame& sg, const VertexSet* mask, bool swapped,
                               std::optional<std::uint32_t> bound, const PmOptions& options = {});

struct DominionResult {
  VertexSet dominion;
  std::optional<Strategy> strategy;  // for `player`, on `dominion`
  std::vector<std::string> violations;
};

/// Player's dominion from the bounded search; contains every dominion of at
/// most h+1 vertices inside the mask.
DominionResult dominion(SymbolicGame& sg, const VertexSet* mask, Player player, std::uint32_t h,
                        const PmOptions& options = {}, bool want_strategy = false);

/**
 * Winning strategy for view-Even on run.winning read off the final ranks:
 * every Even vertex u gets the lowest-id successor v with ρ(v) <=_ℓ ρ(u)
 * (strictly at odd ℓ = Ω(u)).
 */
Strategy extract_strategy_from_pm(PmRun& run);

/// Whole-game solve with the linear-space encoding.
SolveReport solve_pm_symbolic(const ParityGame& game, const SolveOptions& options = {},
                              RankRepresentation representation = RankRepresentation::LinearSpace);

}  // namespace symparity
