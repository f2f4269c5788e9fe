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
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "symparity/game.hpp"

namespace symparity {

/// Operation and space counters for one solver run.
struct OpCounters {
  std::uint64_t unions = 0;
  std::uint64_t intersections = 0;
  std::uint64_t differences = 0;
  std::uint64_t containment_tests = 0;
  std::uint64_t equality_tests = 0;
  std::uint64_t cardinality_queries = 0;
  std::uint64_t pre_ops = 0;
  std::uint64_t cpre_ops = 0;
  std::uint64_t live_sets = 0;
  std::uint64_t peak_live_sets = 0;

  std::uint64_t basic_ops() const noexcept {
    return unions + intersections + differences + containment_tests + equality_tests +
           cardinality_queries;
  }
  std::uint64_t one_step_ops() const noexcept { return pre_ops + cpre_ops; }
};

class UniverseMismatch : public std::logic_error {
 public:
  UniverseMismatch() : std::logic_error("vertex sets belong to different universes") {}
};

enum class BackendKind { Bits, Bdd };
enum class GraphKernel { Auto, Dense, Sparse };

const char* to_string(BackendKind kind) noexcept;

using SetHandle = std::uint32_t;
inline constexpr SetHandle kNoHandle = 0xffffffffU;

/**
 * Representation layer. Handles are reference counted; every operation that
 * returns a handle hands one reference to the caller. `within` may be
 * kNoHandle, meaning the whole universe.
 */
class SetBackend {
 public:
  virtual ~SetBackend() = default;

  virtual std::size_t universe_size() const = 0;

  virtual SetHandle make_empty() = 0;
  virtual SetHandle make_full() = 0;
  virtual SetHandle make_from(std::span<const Vertex> members) = 0;

  virtual void retain(SetHandle h) = 0;
  virtual void release(SetHandle h) = 0;

  virtual SetHandle unite(SetHandle a, SetHandle b) = 0;
  virtual SetHandle intersect(SetHandle a, SetHandle b) = 0;
  virtual SetHandle subtract(SetHandle a, SetHandle b) = 0;

  // Consume the reference held on `a`; may update in place.
  virtual SetHandle unite_assign(SetHandle a, SetHandle b);
  virtual SetHandle intersect_assign(SetHandle a, SetHandle b);
  virtual SetHandle subtract_assign(SetHandle a, SetHandle b);

  virtual bool subset(SetHandle a, SetHandle b) = 0;
  virtual bool equal(SetHandle a, SetHandle b) = 0;
  virtual bool is_empty(SetHandle a) = 0;
  virtual bool contains(SetHandle a, Vertex v) = 0;
  virtual std::size_t count(SetHandle a) = 0;
  virtual VertexList members(SetHandle a) = 0;

  /// {v ∈ within | ∃u ∈ b ∩ within: v→u}
  virtual SetHandle pre(SetHandle b, SetHandle within) = 0;
  /// Controllable predecessor of `p` in the graph induced by `within`.
  virtual SetHandle cpre(Player p, SetHandle b, SetHandle within) = 0;

  virtual const char* name() const = 0;
};

std::unique_ptr<SetBackend> make_bits_backend(const ParityGame& game,
                                              GraphKernel kernel = GraphKernel::Auto);
std::unique_ptr<SetBackend> make_bdd_backend(const ParityGame& game);

class SymbolicGame;

/// RAII handle on a set owned by a SymbolicGame.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(const VertexSet& other);
  VertexSet(VertexSet&& other) noexcept;
  VertexSet& operator=(const VertexSet& other);
  VertexSet& operator=(VertexSet&& other) noexcept;
  ~VertexSet();

  bool valid() const noexcept { return ctx_ != nullptr; }
  SymbolicGame* context() const noexcept { return ctx_; }
  SetHandle handle() const noexcept { return handle_; }

 private:
  friend class SymbolicGame;
  VertexSet(SymbolicGame* ctx, SetHandle h, bool counted);
  void reset() noexcept;

  SymbolicGame* ctx_ = nullptr;
  SetHandle handle_ = kNoHandle;
  bool counted_ = false;
};

/**
 * A game lifted to the symbolic interface: the only way solvers touch vertex
 * sets. Every public operation bumps exactly one counter; `members` is the
 * uncounted escape hatch for output and checking code.
 */
class SymbolicGame {
 public:
  explicit SymbolicGame(const ParityGame& game, BackendKind kind = BackendKind::Bits,
                        GraphKernel kernel = GraphKernel::Auto);
  SymbolicGame(const SymbolicGame&) = delete;
  SymbolicGame& operator=(const SymbolicGame&) = delete;
  ~SymbolicGame();

  const ParityGame& game() const noexcept { return game_; }
  std::size_t vertex_count() const noexcept { return game_.vertex_count(); }
  Priority priority_count() const noexcept { return game_.priority_count(); }
  SetBackend& backend() noexcept { return *backend_; }

  // Input sets; not counted as live.
  const VertexSet& all() const noexcept { return all_; }
  const VertexSet& owned_by(Player p) const noexcept {
    return p == Player::Even ? even_ : odd_;
  }
  const VertexSet& priority_set(Priority p) const { return priority_sets_.at(p); }

  VertexSet empty();
  VertexSet full();
  VertexSet from(std::span<const Vertex> members);
  VertexSet singleton(Vertex v);

  VertexSet unite(const VertexSet& a, const VertexSet& b);
  VertexSet intersect(const VertexSet& a, const VertexSet& b);
  VertexSet subtract(const VertexSet& a, const VertexSet& b);
  VertexSet complement(const VertexSet& a) { return subtract(all_, a); }

  void unite_in(VertexSet& a, const VertexSet& b);
  void intersect_in(VertexSet& a, const VertexSet& b);
  void subtract_in(VertexSet& a, const VertexSet& b);

  bool subset(const VertexSet& a, const VertexSet& b);
  bool equal(const VertexSet& a, const VertexSet& b);
  bool is_empty(const VertexSet& a);
  bool contains(const VertexSet& a, Vertex v);
  std::size_t count(const VertexSet& a);

  VertexList members(const VertexSet& a) const;

  VertexSet pre(const VertexSet& b, const VertexSet* within = nullptr);
  VertexSet cpre(Player p, const VertexSet& b, const VertexSet* within = nullptr);

  OpCounters& counters() noexcept { return counters_; }
  const OpCounters& counters() const noexcept { return counters_; }
  /// Zeroes the op counters; the peak restarts from the current live count.
  void begin_run();

 private:
  friend class VertexSet;
  void check(const VertexSet& a) const;
  VertexSet adopt(SetHandle h);
  VertexSet adopt_uncounted(SetHandle h);
  void note_created();
  void note_destroyed() noexcept;

  ParityGame game_;
  std::unique_ptr<SetBackend> backend_;
  OpCounters counters_;
  VertexSet all_;
  VertexSet even_;
  VertexSet odd_;
  std::vector<VertexSet> priority_sets_;
};

/// Saves the counters on construction and restores them on destruction, so
/// checking code can use the counted interface without polluting a run.
class CounterSnapshot {
 public:
  explicit CounterSnapshot(SymbolicGame& sg) : sg_(sg), saved_(sg.counters()) {}
  ~CounterSnapshot() {
    auto live = sg_.counters().live_sets;
    sg_.counters() = saved_;
    sg_.counters().live_sets = live;
  }
  CounterSnapshot(const CounterSnapshot&) = delete;
  CounterSnapshot& operator=(const CounterSnapshot&) = delete;

 private:
  SymbolicGame& sg_;
  OpCounters saved_;
};

}  // namespace symparity
