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

#include "symparity/rank.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symparity {

bool Rank::is_zero() const noexcept {
  return !top_ && std::all_of(x_.begin(), x_.end(), [](std::uint32_t v) { return v == 0; });
}

std::string Rank::to_string() const {
  if (top_) return "TOP";
  std::string out = "(";
  for (std::size_t s = 0; s < x_.size(); ++s) {
    if (s) out += ',';
    out += std::to_string(x_[s]);
  }
  out += ')';
  return out;
}

bool operator==(const Rank& a, const Rank& b) noexcept {
  if (a.top_ || b.top_) return a.top_ == b.top_;
  return a.x_ == b.x_;
}

std::strong_ordering operator<=>(const Rank& a, const Rank& b) noexcept {
  return RankDomain::compare(a, b, 0);
}

RankDomain::RankDomain(Priority c, std::vector<std::uint32_t> slot_max,
                       std::optional<std::uint32_t> bound)
    : c_(c), max_(std::move(slot_max)), h_(bound) {
  if (max_.size() != c_ / 2) {
    throw std::invalid_argument("rank domain needs one counter bound per odd priority");
  }
}

RankDomain RankDomain::for_game(const ParityGame& game, std::optional<std::uint32_t> bound) {
  const Priority c = game.priority_count();
  std::vector<std::uint32_t> max(c / 2, 0);
  for (Vertex v = 0; v < game.vertex_count(); ++v) {
    const Priority p = game.priority(v);
    if (p % 2 == 1) ++max[p / 2];
  }
  return RankDomain(c, std::move(max), bound);
}

std::uint32_t RankDomain::slot_cap(std::size_t s) const {
  return h_ ? std::min(max_[s], *h_) : max_[s];
}

bool RankDomain::contains(const Rank& r) const {
  if (r.slots() != slots()) return false;
  if (r.is_top()) return true;
  std::uint64_t sum = 0;
  for (std::size_t s = 0; s < slots(); ++s) {
    if (r.slot(s) > max_[s]) return false;
    sum += r.slot(s);
  }
  return !h_ || sum <= *h_;
}

std::uint64_t RankDomain::size() const {
  using u128 = unsigned __int128;
  constexpr u128 kLimit = static_cast<u128>(~std::uint64_t{0});
  if (!h_) {
    u128 prod = 1;
    for (auto m : max_) {
      prod *= static_cast<u128>(m) + 1;
      if (prod > kLimit) throw std::overflow_error("rank domain size exceeds 64 bits");
    }
    if (prod + 1 > kLimit) throw std::overflow_error("rank domain size exceeds 64 bits");
    return static_cast<std::uint64_t>(prod + 1);
  }
  // ways[t] = number of prefixes summing to exactly t
  const std::uint32_t h = *h_;
  std::vector<u128> ways(h + 1, 0);
  ways[0] = 1;
  for (auto m : max_) {
    std::vector<u128> next(h + 1, 0);
    for (std::uint32_t t = 0; t <= h; ++t) {
      if (ways[t] == 0) continue;
      for (std::uint32_t x = 0; x <= m && t + x <= h; ++x) {
        next[t + x] += ways[t];
        if (next[t + x] > kLimit) throw std::overflow_error("rank domain size exceeds 64 bits");
      }
    }
    ways = std::move(next);
  }
  u128 total = 1;
  for (auto w : ways) total += w;
  if (total > kLimit) throw std::overflow_error("rank domain size exceeds 64 bits");
  return static_cast<std::uint64_t>(total);
}

std::strong_ordering RankDomain::compare(const Rank& a, const Rank& b, Priority ell) {
  if (a.is_top() || b.is_top()) {
    if (a.is_top() && b.is_top()) return std::strong_ordering::equal;
    return a.is_top() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  const std::size_t n = std::max(a.slots(), b.slots());
  // slot s holds priority 2s+1, which survives projection at ell iff 2s+1 >= ell
  for (std::size_t s = n; s-- > 0;) {
    if (2 * s + 1 < ell) break;
    const std::uint32_t x = s < a.slots() ? a.slot(s) : 0;
    const std::uint32_t y = s < b.slots() ? b.slot(s) : 0;
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Rank RankDomain::proj(const Rank& r, Priority ell) {
  if (r.is_top()) return r;
  std::vector<std::uint32_t> x = r.counters();
  for (std::size_t s = 0; s < x.size() && 2 * s + 1 < ell; ++s) x[s] = 0;
  return Rank(std::move(x));
}

Rank RankDomain::successor_from(const Rank& r, std::size_t s0) const {
  std::vector<std::uint32_t> y = r.counters();
  for (std::size_t s = 0; s < s0 && s < y.size(); ++s) y[s] = 0;
  std::uint64_t sum = std::accumulate(y.begin(), y.end(), std::uint64_t{0});
  for (std::size_t s = s0; s < y.size(); ++s) {
    if (y[s] + 1 <= max_[s] && (!h_ || sum + 1 <= *h_)) {
      ++y[s];
      return Rank(std::move(y));
    }
    sum -= y[s];
    y[s] = 0;
  }
  return top();
}

Rank RankDomain::max_from(std::size_t s0) const {
  std::vector<std::uint32_t> y(slots(), 0);
  std::uint64_t room = h_ ? *h_ : ~std::uint64_t{0};
  for (std::size_t s = slots(); s-- > s0;) {
    const std::uint32_t take = static_cast<std::uint32_t>(std::min<std::uint64_t>(max_[s], room));
    y[s] = take;
    room -= take;
  }
  return Rank(std::move(y));
}

Rank RankDomain::predecessor_from(const Rank& r, std::size_t s0) const {
  std::vector<std::uint32_t> y = r.counters();
  for (std::size_t s = 0; s < s0 && s < y.size(); ++s) y[s] = 0;
  std::size_t s = s0;
  while (s < y.size() && y[s] == 0) ++s;
  if (s == y.size()) return zero();
  --y[s];
  std::uint64_t sum = std::accumulate(y.begin(), y.end(), std::uint64_t{0});
  for (std::size_t t = s; t-- > s0;) {
    std::uint64_t room = h_ ? (*h_ > sum ? *h_ - sum : 0) : ~std::uint64_t{0};
    const std::uint32_t take = static_cast<std::uint32_t>(std::min<std::uint64_t>(max_[t], room));
    y[t] = take;
    sum += take;
  }
  return Rank(std::move(y));
}

Rank RankDomain::incr(const Rank& r) const {
  if (r.is_top()) return r;
  return successor_from(r, 0);
}

Rank RankDomain::decr(const Rank& r) const {
  if (r.is_top()) return max_from(0);
  return predecessor_from(r, 0);
}

Rank RankDomain::incr_ell(const Rank& r, Priority ell) const {
  if (r.is_top()) return r;
  if (ell % 2 == 0) return proj(r, ell);
  return successor_from(r, ell / 2);
}

Rank RankDomain::decr_ell(const Rank& r, Priority ell) const {
  if (ell % 2 == 0) return proj(r, ell);
  if (r.is_top()) return max_from(ell / 2);
  return predecessor_from(r, ell / 2);
}

std::vector<Rank> RankDomain::enumerate() const {
  std::vector<Rank> out;
  Rank r = zero();
  while (!r.is_top()) {
    out.push_back(r);
    r = incr(r);
  }
  out.push_back(r);
  return out;
}

}  // namespace symparity
