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

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "symparity/vertex_set.hpp"

namespace symparity {
namespace {

using Node = std::uint32_t;

constexpr Node kFalse = 0;
constexpr Node kTrue = 1;

/**
 * Reduced ordered BDDs over interleaved variables: bit j of a vertex id (most
 * significant first) sits at level 2j, its primed copy at level 2j+1. The
 * transition relation E(x, x') is a single BDD; pre is a relational product.
 */
class BddBackend final : public SetBackend {
 public:
  explicit BddBackend(const ParityGame& game) : n_(game.vertex_count()) {
    bits_ = 1;
    while ((std::size_t{1} << bits_) < n_) ++bits_;
    levels_ = 2 * bits_;
    nodes_.push_back({static_cast<std::uint32_t>(levels_), kFalse, kFalse});
    nodes_.push_back({static_cast<std::uint32_t>(levels_), kTrue, kTrue});
    cache_.assign(kCacheSize, CacheEntry{});

    std::vector<std::uint64_t> vertex_keys(n_);
    for (Vertex v = 0; v < n_; ++v) vertex_keys[v] = spread(v);
    full_ = build(vertex_keys);
    pin(full_);

    std::vector<std::uint64_t> owner_keys[2];
    std::vector<std::uint64_t> edge_keys;
    edge_keys.reserve(game.edge_count());
    for (Vertex v = 0; v < n_; ++v) {
      owner_keys[game.owner(v) == Player::Even ? 0 : 1].push_back(spread(v));
      for (Vertex w : game.successors(v)) edge_keys.push_back(spread(v) | (spread(w) >> 1));
    }
    owned_[0] = build(owner_keys[0]);
    owned_[1] = build(owner_keys[1]);
    pin(owned_[0]);
    pin(owned_[1]);
    std::sort(edge_keys.begin(), edge_keys.end());
    edge_keys.erase(std::unique(edge_keys.begin(), edge_keys.end()), edge_keys.end());
    relation_ = build(edge_keys, true);
    pin(relation_);
  }

  std::size_t universe_size() const override { return n_; }
  const char* name() const override { return "bdd"; }

  SetHandle make_empty() override { return hand_out(kFalse); }
  SetHandle make_full() override { return hand_out(full_); }

  SetHandle make_from(std::span<const Vertex> members) override {
    maybe_gc();
    std::vector<std::uint64_t> keys;
    keys.reserve(members.size());
    for (Vertex v : members) keys.push_back(spread(v));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return hand_out(build(keys));
  }

  void retain(SetHandle h) override { ++ext_[h]; }

  void release(SetHandle h) override {
    auto it = ext_.find(h);
    assert(it != ext_.end());
    if (--it->second == 0) ext_.erase(it);
  }

  SetHandle unite(SetHandle a, SetHandle b) override {
    maybe_gc();
    return hand_out(apply(Op::Or, a, b));
  }
  SetHandle intersect(SetHandle a, SetHandle b) override {
    maybe_gc();
    return hand_out(apply(Op::And, a, b));
  }
  SetHandle subtract(SetHandle a, SetHandle b) override {
    maybe_gc();
    return hand_out(apply(Op::Diff, a, b));
  }

  bool subset(SetHandle a, SetHandle b) override { return apply(Op::Diff, a, b) == kFalse; }
  bool equal(SetHandle a, SetHandle b) override { return a == b; }
  bool is_empty(SetHandle a) override { return a == kFalse; }

  bool contains(SetHandle a, Vertex v) override {
    Node f = a;
    const std::uint64_t key = spread(v);
    while (f > kTrue) {
      const auto& nd = nodes_[f];
      const bool bit = (key >> (levels_ - 1 - nd.level)) & 1U;
      f = bit ? nd.hi : nd.lo;
    }
    return f == kTrue;
  }

  std::size_t count(SetHandle a) override {
    std::unordered_map<Node, std::size_t> memo;
    return count_from(a, 0, memo);
  }

  VertexList members(SetHandle a) override {
    VertexList out;
    collect(a, 0, 0, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  SetHandle pre(SetHandle b, SetHandle within) override {
    maybe_gc();
    Node target = within == kNoHandle ? b : apply(Op::And, b, within);
    Node r = pre_node(target);
    if (within != kNoHandle) r = apply(Op::And, r, within);
    return hand_out(r);
  }

  SetHandle cpre(Player p, SetHandle b, SetHandle within) override {
    maybe_gc();
    const Node m = within == kNoHandle ? full_ : within;
    const Node bm = apply(Op::And, b, m);
    const Node some_in = apply(Op::And, pre_node(bm), m);
    const Node outside = apply(Op::Diff, m, b);
    const Node some_out = apply(Op::And, pre_node(outside), m);
    const Node opp = owned_[p == Player::Even ? 1 : 0];
    const Node blocked = apply(Op::And, some_out, opp);
    return hand_out(apply(Op::Diff, some_in, blocked));
  }

  std::size_t node_count() const { return nodes_.size() - free_nodes_.size(); }

 private:
  struct NodeData {
    std::uint32_t level;
    Node lo;
    Node hi;
  };

  enum class Op : std::uint32_t { And = 1, Or, Diff, Exists, Prime };

  struct CacheEntry {
    std::uint32_t op = 0;
    Node a = 0;
    Node b = 0;
    Node result = 0;
  };

  static constexpr std::size_t kCacheSize = 1 << 16;

  // Places bit j of v (MSB first) at key position for level 2j.
  std::uint64_t spread(Vertex v) const {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < bits_; ++j) {
      const bool bit = (v >> (bits_ - 1 - j)) & 1U;
      if (bit) key |= std::uint64_t{1} << (levels_ - 1 - 2 * j);
    }
    return key;
  }

  static std::uint64_t unique_key(std::uint32_t level, Node lo, Node hi) {
    return (static_cast<std::uint64_t>(level) << 58) ^ (static_cast<std::uint64_t>(lo) << 29) ^
           hi ^ (static_cast<std::uint64_t>(hi) << 40);
  }

  struct Triple {
    std::uint32_t level;
    Node lo, hi;
    bool operator==(const Triple&) const = default;
  };
  struct TripleHash {
    std::size_t operator()(const Triple& t) const noexcept { return unique_key(t.level, t.lo, t.hi); }
  };

  Node mk(std::uint32_t level, Node lo, Node hi) {
    if (lo == hi) return lo;
    const Triple key{level, lo, hi};
    auto it = unique_.find(key);
    if (it != unique_.end()) return it->second;
    Node id;
    if (!free_nodes_.empty()) {
      id = free_nodes_.back();
      free_nodes_.pop_back();
      nodes_[id] = {level, lo, hi};
    } else {
      id = static_cast<Node>(nodes_.size());
      nodes_.push_back({level, lo, hi});
    }
    unique_.emplace(key, id);
    return id;
  }

  // Builds the BDD whose satisfying keys are exactly `keys` (sorted, unique).
  // Vertex sets skip the primed levels, which stay unconstrained.
  Node build(const std::vector<std::uint64_t>& keys, bool primed_too = false) {
    return build_range(keys, 0, keys.size(), 0, primed_too);
  }

  Node build_range(const std::vector<std::uint64_t>& keys, std::size_t lo, std::size_t hi,
                   std::uint32_t level, bool primed_too) {
    if (lo == hi) return kFalse;
    if (level == levels_) return kTrue;
    if (!primed_too && level % 2 == 1) return build_range(keys, lo, hi, level + 1, primed_too);
    const std::uint64_t bit = std::uint64_t{1} << (levels_ - 1 - level);
    // keys are sorted, so the ones with this bit set form a suffix once the
    // higher bits agree (they do within a recursive range)
    std::size_t mid = lo;
    while (mid < hi && (keys[mid] & bit) == 0) ++mid;
    const Node l = build_range(keys, lo, mid, level + 1, primed_too);
    const Node h = build_range(keys, mid, hi, level + 1, primed_too);
    return mk(level, l, h);
  }

  CacheEntry& slot(Op op, Node a, Node b) {
    std::uint64_t h = (static_cast<std::uint64_t>(a) * 0x9E3779B97F4A7C15ULL) ^
                      (static_cast<std::uint64_t>(b) * 0xC2B2AE3D27D4EB4FULL) ^
                      static_cast<std::uint64_t>(op);
    return cache_[(h >> 20) & (kCacheSize - 1)];
  }

  Node apply(Op op, Node a, Node b) {
    switch (op) {
      case Op::And:
        if (a == kFalse || b == kFalse) return kFalse;
        if (a == kTrue) return b;
        if (b == kTrue || a == b) return a;
        if (a > b) std::swap(a, b);
        break;
      case Op::Or:
        if (a == kTrue || b == kTrue) return kTrue;
        if (a == kFalse) return b;
        if (b == kFalse || a == b) return a;
        if (a > b) std::swap(a, b);
        break;
      case Op::Diff:
        if (a == kFalse || b == kTrue || a == b) return kFalse;
        if (b == kFalse) return a;
        break;
      default:
        break;
    }
    CacheEntry& e = slot(op, a, b);
    if (e.op == static_cast<std::uint32_t>(op) && e.a == a && e.b == b) return e.result;

    const auto la = nodes_[a].level;
    const auto lb = nodes_[b].level;
    const auto level = std::min(la, lb);
    const Node a0 = la == level ? nodes_[a].lo : a;
    const Node a1 = la == level ? nodes_[a].hi : a;
    const Node b0 = lb == level ? nodes_[b].lo : b;
    const Node b1 = lb == level ? nodes_[b].hi : b;
    const Node lo = apply(op, a0, b0);
    const Node hi = apply(op, a1, b1);
    const Node r = mk(level, lo, hi);
    CacheEntry& e2 = slot(op, a, b);
    e2 = {static_cast<std::uint32_t>(op), a, b, r};
    return r;
  }

  // ∃x'. relation(x, x') ∧ g(x'), g given over primed variables.
  Node and_exists(Node f, Node g) {
    if (f == kFalse || g == kFalse) return kFalse;
    if (f == kTrue && g == kTrue) return kTrue;
    CacheEntry& e = slot(Op::Exists, f, g);
    if (e.op == static_cast<std::uint32_t>(Op::Exists) && e.a == f && e.b == g) return e.result;

    const auto lf = nodes_[f].level;
    const auto lg = nodes_[g].level;
    const auto level = std::min(lf, lg);
    const Node f0 = lf == level ? nodes_[f].lo : f;
    const Node f1 = lf == level ? nodes_[f].hi : f;
    const Node g0 = lg == level ? nodes_[g].lo : g;
    const Node g1 = lg == level ? nodes_[g].hi : g;
    Node r;
    if (level % 2 == 1) {
      const Node lo = and_exists(f0, g0);
      r = lo == kTrue ? kTrue : apply(Op::Or, lo, and_exists(f1, g1));
    } else {
      r = mk(level, and_exists(f0, g0), and_exists(f1, g1));
    }
    CacheEntry& e2 = slot(Op::Exists, f, g);
    e2 = {static_cast<std::uint32_t>(Op::Exists), f, g, r};
    return r;
  }

  // Moves a set over x onto x' (level 2j -> 2j+1).
  Node prime(Node f) {
    if (f <= kTrue) return f;
    CacheEntry& e = slot(Op::Prime, f, 0);
    if (e.op == static_cast<std::uint32_t>(Op::Prime) && e.a == f && e.b == 0) return e.result;
    const auto nd = nodes_[f];
    const Node r = mk(nd.level + 1, prime(nd.lo), prime(nd.hi));
    CacheEntry& e2 = slot(Op::Prime, f, 0);
    e2 = {static_cast<std::uint32_t>(Op::Prime), f, 0, r};
    return r;
  }

  Node pre_node(Node b) { return and_exists(relation_, prime(b)); }

  std::size_t count_from(Node f, std::uint32_t level,
                         std::unordered_map<Node, std::size_t>& memo) {
    // counts assignments of the even levels >= `level`
    if (f == kFalse) return 0;
    const std::uint32_t node_level = f == kTrue ? levels_ : nodes_[f].level;
    const std::size_t skipped = (node_level - level + 1) / 2;  // even levels skipped
    std::size_t below;
    if (f == kTrue) {
      below = 1;
    } else {
      auto it = memo.find(f);
      if (it != memo.end()) {
        below = it->second;
      } else {
        below = count_from(nodes_[f].lo, node_level + 2, memo) +
                count_from(nodes_[f].hi, node_level + 2, memo);
        memo.emplace(f, below);
      }
    }
    return below << skipped;
  }

  void collect(Node f, std::uint32_t level, std::uint64_t prefix, VertexList& out) {
    if (f == kFalse) return;
    if (level >= levels_) {
      out.push_back(static_cast<Vertex>(prefix));
      return;
    }
    const std::uint32_t node_level = f == kTrue ? levels_ : nodes_[f].level;
    if (node_level > level) {
      collect(f, level + 2, prefix << 1, out);
      collect(f, level + 2, (prefix << 1) | 1U, out);
      return;
    }
    collect(nodes_[f].lo, level + 2, prefix << 1, out);
    collect(nodes_[f].hi, level + 2, (prefix << 1) | 1U, out);
  }

  SetHandle hand_out(Node f) {
    ++ext_[f];
    return f;
  }

  void pin(Node f) { pinned_.push_back(f); }

  void maybe_gc() {
    if (node_count() < gc_threshold_) return;
    collect_garbage();
    gc_threshold_ = std::max<std::size_t>(gc_threshold_, 2 * node_count());
  }

  void collect_garbage() {
    std::vector<bool> marked(nodes_.size(), false);
    marked[kFalse] = marked[kTrue] = true;
    std::vector<Node> stack(pinned_);
    for (const auto& [node, refs] : ext_) stack.push_back(node);
    while (!stack.empty()) {
      const Node f = stack.back();
      stack.pop_back();
      if (marked[f]) continue;
      marked[f] = true;
      stack.push_back(nodes_[f].lo);
      stack.push_back(nodes_[f].hi);
    }
    unique_.clear();
    free_nodes_.clear();
    for (Node id = 2; id < nodes_.size(); ++id) {
      if (marked[id]) {
        unique_.emplace(Triple{nodes_[id].level, nodes_[id].lo, nodes_[id].hi}, id);
      } else {
        free_nodes_.push_back(id);
      }
    }
    std::fill(cache_.begin(), cache_.end(), CacheEntry{});
  }

  std::size_t n_;
  std::size_t bits_ = 1;
  std::uint32_t levels_ = 2;
  std::vector<NodeData> nodes_;
  std::vector<Node> free_nodes_;
  std::unordered_map<Triple, Node, TripleHash> unique_;
  std::vector<CacheEntry> cache_;
  std::unordered_map<Node, std::uint32_t> ext_;
  std::vector<Node> pinned_;
  std::size_t gc_threshold_ = 1 << 18;

  Node full_ = kFalse;
  Node owned_[2] = {kFalse, kFalse};
  Node relation_ = kFalse;
};

}  // namespace

std::unique_ptr<SetBackend> make_bdd_backend(const ParityGame& game) {
  return std::make_unique<BddBackend>(game);
}

}  // namespace symparity
