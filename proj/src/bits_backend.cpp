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
#include <bit>
#include <cassert>

#include "symparity/simd/kernels.hpp"
#include "symparity/vertex_set.hpp"

namespace symparity {
namespace {

using simd::Word;

constexpr std::size_t kDenseVertexLimit = 1024;

/**
 * Packed bit vectors in a slot pool. Slots are reference counted so copies of
 * a VertexSet share storage; a uniquely held slot is updated in place.
 */
class BitsBackend final : public SetBackend {
 public:
  BitsBackend(const ParityGame& game, GraphKernel kernel)
      : n_(game.vertex_count()),
        words_(std::max<std::size_t>(1, (n_ + 63) / 64)),
        k_(simd::active_kernels()) {
    const std::size_t m = game.edge_count();
    bool dense = n_ <= kDenseVertexLimit || (n_ * n_) / 64 <= 8 * m;
    if (kernel == GraphKernel::Dense) dense = true;
    if (kernel == GraphKernel::Sparse) dense = false;
    dense_ = dense;

    owner_odd_.assign(words_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      if (game.owner(v) == Player::Odd) owner_odd_[v / 64] |= Word{1} << (v % 64);
    }
    owner_even_.assign(words_, 0);
    for (std::size_t i = 0; i < words_; ++i) owner_even_[i] = ~owner_odd_[i] & tail_mask(i);

    if (dense_) {
      rows_.assign(n_ * words_, 0);
      for (Vertex v = 0; v < n_; ++v) {
        for (Vertex w : game.successors(v)) rows_[v * words_ + w / 64] |= Word{1} << (w % 64);
      }
    }
    // Reverse adjacency is used by the sparse kernel.
    rev_offsets_.assign(n_ + 1, 0);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : game.successors(v)) ++rev_offsets_[w + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) rev_offsets_[i + 1] += rev_offsets_[i];
    rev_targets_.resize(rev_offsets_[n_]);
    std::vector<std::size_t> fill(rev_offsets_.begin(), rev_offsets_.end() - 1);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : game.successors(v)) rev_targets_[fill[w]++] = v;
    }
  }

  std::size_t universe_size() const override { return n_; }
  const char* name() const override { return dense_ ? "bits/dense" : "bits/sparse"; }

  SetHandle make_empty() override {
    SetHandle h = alloc();
    std::fill_n(data(h), words_, Word{0});
    return h;
  }

  SetHandle make_full() override {
    SetHandle h = alloc();
    Word* d = data(h);
    for (std::size_t i = 0; i < words_; ++i) d[i] = tail_mask(i);
    return h;
  }

  SetHandle make_from(std::span<const Vertex> members) override {
    SetHandle h = make_empty();
    Word* d = data(h);
    for (Vertex v : members) d[v / 64] |= Word{1} << (v % 64);
    return h;
  }

  void retain(SetHandle h) override { ++refs_[h]; }

  void release(SetHandle h) override {
    assert(refs_[h] > 0);
    if (--refs_[h] == 0) free_.push_back(h);
  }

  SetHandle unite(SetHandle a, SetHandle b) override { return binary(k_.bit_or, a, b); }
  SetHandle intersect(SetHandle a, SetHandle b) override { return binary(k_.bit_and, a, b); }
  SetHandle subtract(SetHandle a, SetHandle b) override { return binary(k_.bit_andnot, a, b); }

  SetHandle unite_assign(SetHandle a, SetHandle b) override {
    return binary_assign(k_.bit_or, a, b);
  }
  SetHandle intersect_assign(SetHandle a, SetHandle b) override {
    return binary_assign(k_.bit_and, a, b);
  }
  SetHandle subtract_assign(SetHandle a, SetHandle b) override {
    return binary_assign(k_.bit_andnot, a, b);
  }

  bool subset(SetHandle a, SetHandle b) override { return k_.subset(data(a), data(b), words_); }
  bool equal(SetHandle a, SetHandle b) override { return k_.equal(data(a), data(b), words_); }
  bool is_empty(SetHandle a) override { return !k_.any(data(a), words_); }

  bool contains(SetHandle a, Vertex v) override {
    return (data(a)[v / 64] >> (v % 64)) & 1U;
  }

  std::size_t count(SetHandle a) override { return k_.popcount(data(a), words_); }

  VertexList members(SetHandle a) override {
    VertexList out;
    const Word* d = data(a);
    for (std::size_t i = 0; i < words_; ++i) {
      Word w = d[i];
      while (w) {
        out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

  SetHandle pre(SetHandle b, SetHandle within) override {
    SetHandle r = make_empty();
    const Word* m = within == kNoHandle ? nullptr : data(within);
    if (dense_) {
      pre_dense(data(r), data(b), m);
    } else {
      pre_sparse(data(r), data(b), m);
    }
    return r;
  }

  SetHandle cpre(Player p, SetHandle b, SetHandle within) override {
    SetHandle r = make_empty();
    const Word* m = within == kNoHandle ? nullptr : data(within);
    const Word* opp = p == Player::Even ? owner_odd_.data() : owner_even_.data();
    if (dense_) {
      cpre_dense(data(r), data(b), m, opp);
    } else {
      cpre_sparse(data(r), data(b), m, opp);
    }
    return r;
  }

 private:
  Word tail_mask(std::size_t word) const {
    const std::size_t lo = word * 64;
    if (lo >= n_) return 0;
    const std::size_t bits = std::min<std::size_t>(64, n_ - lo);
    return bits == 64 ? ~Word{0} : (Word{1} << bits) - 1;
  }

  SetHandle alloc() {
    SetHandle h;
    if (!free_.empty()) {
      h = free_.back();
      free_.pop_back();
    } else {
      h = static_cast<SetHandle>(refs_.size());
      refs_.push_back(0);
      pool_.resize(pool_.size() + words_);
    }
    refs_[h] = 1;
    return h;
  }

  Word* data(SetHandle h) { return pool_.data() + static_cast<std::size_t>(h) * words_; }

  using BinaryKernel = void (*)(Word*, const Word*, const Word*, std::size_t);

  SetHandle binary(BinaryKernel f, SetHandle a, SetHandle b) {
    SetHandle r = alloc();  // may move the pool; take pointers afterwards
    f(data(r), data(a), data(b), words_);
    return r;
  }

  SetHandle binary_assign(BinaryKernel f, SetHandle a, SetHandle b) {
    if (refs_[a] == 1) {
      f(data(a), data(a), data(b), words_);
      return a;
    }
    SetHandle r = binary(f, a, b);
    release(a);
    return r;
  }

  bool in_mask(const Word* m, Vertex v) const {
    return m == nullptr || ((m[v / 64] >> (v % 64)) & 1U);
  }

  const Word* full_or(const Word* m) {
    if (m) return m;
    if (full_cache_.empty()) {
      full_cache_.resize(words_);
      for (std::size_t i = 0; i < words_; ++i) full_cache_[i] = tail_mask(i);
    }
    return full_cache_.data();
  }

  void pre_dense(Word* out, const Word* b, const Word* m) {
    const Word* mm = full_or(m);
    for (Vertex v = 0; v < n_; ++v) {
      if (!in_mask(m, v)) continue;
      if (k_.intersects3(rows_.data() + v * words_, b, mm, words_)) {
        out[v / 64] |= Word{1} << (v % 64);
      }
    }
  }

  void cpre_dense(Word* out, const Word* b, const Word* m, const Word* opp) {
    const Word* mm = full_or(m);
    for (Vertex v = 0; v < n_; ++v) {
      if (!in_mask(m, v)) continue;
      const Word* row = rows_.data() + v * words_;
      if (!k_.intersects3(row, b, mm, words_)) continue;
      const bool opponent_owned = (opp[v / 64] >> (v % 64)) & 1U;
      if (opponent_owned && k_.escapes(row, mm, b, words_)) continue;
      out[v / 64] |= Word{1} << (v % 64);
    }
  }

  // Marks every predecessor (inside m) of a vertex in (src ∩ m).
  void mark_predecessors(Word* out, const Word* src, const Word* m) {
    for (std::size_t i = 0; i < words_; ++i) {
      Word w = src[i] & (m ? m[i] : ~Word{0});
      while (w) {
        const Vertex u = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
        for (std::size_t e = rev_offsets_[u]; e < rev_offsets_[u + 1]; ++e) {
          const Vertex v = rev_targets_[e];
          if (in_mask(m, v)) out[v / 64] |= Word{1} << (v % 64);
        }
      }
    }
  }

  void pre_sparse(Word* out, const Word* b, const Word* m) { mark_predecessors(out, b, m); }

  void cpre_sparse(Word* out, const Word* b, const Word* m, const Word* opp) {
    mark_predecessors(out, b, m);
    // Opponent vertices with an edge leaving b (inside m) drop out.
    scratch_.assign(words_, 0);
    escape_src_.resize(words_);
    const Word* mm = full_or(m);
    for (std::size_t i = 0; i < words_; ++i) escape_src_[i] = mm[i] & ~b[i];
    mark_predecessors(scratch_.data(), escape_src_.data(), m);
    for (std::size_t i = 0; i < words_; ++i) out[i] &= ~(scratch_[i] & opp[i]);
  }

  std::size_t n_;
  std::size_t words_;
  const simd::Kernels& k_;
  bool dense_ = false;

  std::vector<Word> pool_;
  std::vector<std::uint32_t> refs_;
  std::vector<SetHandle> free_;

  std::vector<Word> owner_even_;
  std::vector<Word> owner_odd_;
  std::vector<Word> rows_;
  std::vector<std::size_t> rev_offsets_;
  std::vector<Vertex> rev_targets_;
  std::vector<Word> full_cache_;
  std::vector<Word> scratch_;
  std::vector<Word> escape_src_;
};

}  // namespace

std::unique_ptr<SetBackend> make_bits_backend(const ParityGame& game, GraphKernel kernel) {
  return std::make_unique<BitsBackend>(game, kernel);
}

}  // namespace symparity
