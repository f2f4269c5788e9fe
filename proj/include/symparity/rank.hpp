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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symparity/game.hpp"

namespace symparity {

/**
 * Element of the progress-measure codomain: counters for the odd priorities
 * 1, 3, 5, ... (slot s holds priority 2s+1) or the top element.
 */
class Rank {
 public:
  Rank() = default;
  explicit Rank(std::vector<std::uint32_t> counters) : x_(std::move(counters)) {}

  static Rank top(std::size_t slots) {
    Rank r(std::vector<std::uint32_t>(slots, 0));
    r.top_ = true;
    return r;
  }
  static Rank zero(std::size_t slots) { return Rank(std::vector<std::uint32_t>(slots, 0)); }

  bool is_top() const noexcept { return top_; }
  bool is_zero() const noexcept;
  std::size_t slots() const noexcept { return x_.size(); }

  /// Counter at odd priority `i`.
  std::uint32_t at_priority(Priority i) const { return x_.at(i / 2); }
  std::uint32_t slot(std::size_t s) const { return x_.at(s); }
  const std::vector<std::uint32_t>& counters() const noexcept { return x_; }

  /// "(x1,x3,...)" or "TOP"
  std::string to_string() const;

  friend bool operator==(const Rank& a, const Rank& b) noexcept;
  friend std::strong_ordering operator<=>(const Rank& a, const Rank& b) noexcept;

 private:
  std::vector<std::uint32_t> x_;
  bool top_ = false;
};

/**
 * Full codomain (every counter x_i <= n_i) or the bounded one where the
 * counters also sum to at most h. Counts n_i may be 0.
 */
class RankDomain {
 public:
  RankDomain() = default;
  RankDomain(Priority c, std::vector<std::uint32_t> slot_max,
             std::optional<std::uint32_t> bound = std::nullopt);

  /// n_i = |P_i| for each odd i < c.
  static RankDomain for_game(const ParityGame& game,
                             std::optional<std::uint32_t> bound = std::nullopt);

  Priority priority_count() const noexcept { return c_; }
  std::size_t slots() const noexcept { return max_.size(); }
  const std::vector<std::uint32_t>& slot_max() const noexcept { return max_; }
  std::optional<std::uint32_t> bound() const noexcept { return h_; }
  /// Largest value slot s can take (n_s, capped by h when bounded).
  std::uint32_t slot_cap(std::size_t s) const;

  Rank zero() const { return Rank::zero(slots()); }
  Rank top() const { return Rank::top(slots()); }

  bool contains(const Rank& r) const;

  /// Number of ranks including top. Throws std::overflow_error past 2^64-1.
  std::uint64_t size() const;

  /// Orders ⟨a⟩_ℓ against ⟨b⟩_ℓ; ℓ = 0 is the plain order.
  static std::strong_ordering compare(const Rank& a, const Rank& b, Priority ell);
  static Rank proj(const Rank& r, Priority ell);

  Rank incr(const Rank& r) const;
  Rank decr(const Rank& r) const;
  Rank incr_ell(const Rank& r, Priority ell) const;
  Rank decr_ell(const Rank& r, Priority ell) const;

  /// All ranks in increasing order (tests, small domains).
  std::vector<Rank> enumerate() const;

 private:
  // Successor of ⟨r⟩ among vectors that are zero below slot s0.
  Rank successor_from(const Rank& r, std::size_t s0) const;
  Rank predecessor_from(const Rank& r, std::size_t s0) const;
  Rank max_from(std::size_t s0) const;

  Priority c_ = 0;
  std::vector<std::uint32_t> max_;
  std::optional<std::uint32_t> h_;
};

}  // namespace symparity
