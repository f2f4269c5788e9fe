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

#include "symparity/vertex_set.hpp"

#include <algorithm>

namespace symparity {

const char* to_string(BackendKind kind) noexcept {
  return kind == BackendKind::Bits ? "bits" : "bdd";
}

SetHandle SetBackend::unite_assign(SetHandle a, SetHandle b) {
  SetHandle r = unite(a, b);
  release(a);
  return r;
}

SetHandle SetBackend::intersect_assign(SetHandle a, SetHandle b) {
  SetHandle r = intersect(a, b);
  release(a);
  return r;
}

SetHandle SetBackend::subtract_assign(SetHandle a, SetHandle b) {
  SetHandle r = subtract(a, b);
  release(a);
  return r;
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(SymbolicGame* ctx, SetHandle h, bool counted)
    : ctx_(ctx), handle_(h), counted_(counted) {
  if (counted_) ctx_->note_created();
}

VertexSet::VertexSet(const VertexSet& other)
    : ctx_(other.ctx_), handle_(other.handle_), counted_(other.ctx_ != nullptr) {
  if (ctx_) {
    ctx_->backend().retain(handle_);
    ctx_->note_created();
  }
}

VertexSet::VertexSet(VertexSet&& other) noexcept
    : ctx_(other.ctx_), handle_(other.handle_), counted_(other.counted_) {
  other.ctx_ = nullptr;
  other.handle_ = kNoHandle;
  other.counted_ = false;
}

VertexSet& VertexSet::operator=(const VertexSet& other) {
  if (this == &other) return *this;
  VertexSet tmp(other);
  *this = std::move(tmp);
  return *this;
}

VertexSet& VertexSet::operator=(VertexSet&& other) noexcept {
  if (this == &other) return *this;
  reset();
  ctx_ = other.ctx_;
  handle_ = other.handle_;
  counted_ = other.counted_;
  other.ctx_ = nullptr;
  other.handle_ = kNoHandle;
  other.counted_ = false;
  return *this;
}

VertexSet::~VertexSet() { reset(); }

void VertexSet::reset() noexcept {
  if (!ctx_) return;
  ctx_->backend().release(handle_);
  if (counted_) ctx_->note_destroyed();
  ctx_ = nullptr;
  handle_ = kNoHandle;
  counted_ = false;
}

// ------------------------------------------------------------- SymbolicGame

SymbolicGame::SymbolicGame(const ParityGame& game, BackendKind kind, GraphKernel kernel)
    : game_(game) {
  backend_ = kind == BackendKind::Bits ? make_bits_backend(game_, kernel)
                                       : make_bdd_backend(game_);
  all_ = adopt_uncounted(backend_->make_full());
  VertexList even, odd;
  std::vector<VertexList> by_priority(game_.priority_count());
  for (Vertex v = 0; v < game_.vertex_count(); ++v) {
    (game_.owner(v) == Player::Even ? even : odd).push_back(v);
    by_priority[game_.priority(v)].push_back(v);
  }
  even_ = adopt_uncounted(backend_->make_from(even));
  odd_ = adopt_uncounted(backend_->make_from(odd));
  priority_sets_.reserve(by_priority.size());
  for (const auto& members : by_priority) {
    priority_sets_.push_back(adopt_uncounted(backend_->make_from(members)));
  }
}

SymbolicGame::~SymbolicGame() {
  priority_sets_.clear();
  all_ = VertexSet();
  even_ = VertexSet();
  odd_ = VertexSet();
}

void SymbolicGame::note_created() {
  ++counters_.live_sets;
  counters_.peak_live_sets = std::max(counters_.peak_live_sets, counters_.live_sets);
}

void SymbolicGame::note_destroyed() noexcept { --counters_.live_sets; }

void SymbolicGame::begin_run() {
  const auto live = counters_.live_sets;
  counters_ = OpCounters{};
  counters_.live_sets = live;
  counters_.peak_live_sets = live;
}

void SymbolicGame::check(const VertexSet& a) const {
  if (a.ctx_ != this) throw UniverseMismatch();
}

VertexSet SymbolicGame::adopt(SetHandle h) { return VertexSet(this, h, true); }
VertexSet SymbolicGame::adopt_uncounted(SetHandle h) { return VertexSet(this, h, false); }

VertexSet SymbolicGame::empty() { return adopt(backend_->make_empty()); }
VertexSet SymbolicGame::full() { return adopt(backend_->make_full()); }

VertexSet SymbolicGame::from(std::span<const Vertex> members) {
  for (Vertex v : members) {
    if (v >= vertex_count()) throw std::out_of_range("vertex id outside the universe");
  }
  return adopt(backend_->make_from(members));
}

VertexSet SymbolicGame::singleton(Vertex v) { return from(std::span<const Vertex>(&v, 1)); }

VertexSet SymbolicGame::unite(const VertexSet& a, const VertexSet& b) {
  check(a), check(b);
  ++counters_.unions;
  return adopt(backend_->unite(a.handle_, b.handle_));
}

VertexSet SymbolicGame::intersect(const VertexSet& a, const VertexSet& b) {
  check(a), check(b);
  ++counters_.intersections;
  return adopt(backend_->intersect(a.handle_, b.handle_));
}

VertexSet SymbolicGame::subtract(const VertexSet& a, const VertexSet& b) {
  check(a), check(b);
  ++counters_.differences;
  return adopt(backend_->subtract(a.handle_, b.handle_));
}

void SymbolicGame::unite_in(VertexSet& a, const VertexSet& b) {
  check(a), check(b);
  ++counters_.unions;
  if (a.counted_) {
    a.handle_ = backend_->unite_assign(a.handle_, b.handle_);
  } else {
    a = adopt(backend_->unite(a.handle_, b.handle_));
  }
}

void SymbolicGame::intersect_in(VertexSet& a, const VertexSet& b) {
  check(a), check(b);
  ++counters_.intersections;
  if (a.counted_) {
    a.handle_ = backend_->intersect_assign(a.handle_, b.handle_);
  } else {
    a = adopt(backend_->intersect(a.handle_, b.handle_));
  }
}

void SymbolicGame::subtract_in(VertexSet& a, const VertexSet& b) {
  check(a), check(b);
  ++counters_.differences;
  if (a.counted_) {
    a.handle_ = backend_->subtract_assign(a.handle_, b.handle_);
  } else {
    a = adopt(backend_->subtract(a.handle_, b.handle_));
  }
}

bool SymbolicGame::subset(const VertexSet& a, const VertexSet& b) {
  check(a), check(b);
  ++counters_.containment_tests;
  return backend_->subset(a.handle_, b.handle_);
}

bool SymbolicGame::equal(const VertexSet& a, const VertexSet& b) {
  check(a), check(b);
  ++counters_.equality_tests;
  return backend_->equal(a.handle_, b.handle_);
}

bool SymbolicGame::is_empty(const VertexSet& a) {
  check(a);
  ++counters_.equality_tests;
  return backend_->is_empty(a.handle_);
}

bool SymbolicGame::contains(const VertexSet& a, Vertex v) {
  check(a);
  ++counters_.containment_tests;
  return v < vertex_count() && backend_->contains(a.handle_, v);
}

std::size_t SymbolicGame::count(const VertexSet& a) {
  check(a);
  ++counters_.cardinality_queries;
  return backend_->count(a.handle_);
}

VertexList SymbolicGame::members(const VertexSet& a) const {
  check(a);
  return backend_->members(a.handle_);
}

VertexSet SymbolicGame::pre(const VertexSet& b, const VertexSet* within) {
  check(b);
  if (within) check(*within);
  ++counters_.pre_ops;
  return adopt(backend_->pre(b.handle_, within ? within->handle_ : kNoHandle));
}

VertexSet SymbolicGame::cpre(Player p, const VertexSet& b, const VertexSet* within) {
  check(b);
  if (within) check(*within);
  ++counters_.cpre_ops;
  return adopt(backend_->cpre(p, b.handle_, within ? within->handle_ : kNoHandle));
}

}  // namespace symparity
