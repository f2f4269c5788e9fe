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

#include <doctest.h>

#include <optional>

#include "common.hpp"

using namespace symparity;
using namespace symparity::testing;

namespace {

Rank rk(std::uint32_t x1, std::uint32_t x3) { return Rank({x1, x3}); }

RankDomain ex1_full() { return RankDomain::for_game(ex1()); }
RankDomain ex1_bounded(std::uint32_t h) { return RankDomain::for_game(ex1(), h); }

bool zero_below(const Rank& r, Priority ell) { return RankDomain::proj(r, ell) == r; }

// Reference operators from the definitions, by scanning the ordered domain.
Rank brute_incr_ell(const RankDomain& d, const Rank& r, Priority ell) {
  if (r.is_top()) return r;
  if (ell % 2 == 0) return RankDomain::proj(r, ell);
  for (const Rank& s : d.enumerate()) {
    if (s.is_top()) return s;
    if (zero_below(s, ell) && RankDomain::compare(s, r, ell) > 0) return s;
  }
  return d.top();
}

Rank brute_decr_ell(const RankDomain& d, const Rank& r, Priority ell) {
  std::optional<Rank> best;
  for (const Rank& s : d.enumerate()) {
    if (s.is_top()) break;
    if (zero_below(s, ell) && (r.is_top() || RankDomain::compare(s, r, ell) < 0)) best = s;
  }
  return best ? *best : d.zero();
}

}  // namespace

TEST_CASE("domain sizes") {
  CHECK(ex1_full().size() == 9);
  CHECK(ex1_bounded(1).size() == 4);
  CHECK(RankDomain(1, {}).size() == 2);
  CHECK(ex1_full().enumerate().size() == 9);
  const auto b1 = ex1_bounded(1).enumerate();
  REQUIRE(b1.size() == 4);
  CHECK(b1[1] == rk(1, 0));
  CHECK(b1[2] == rk(0, 1));
  CHECK(b1[3].is_top());
}

TEST_CASE("size overflow is reported") {
  const RankDomain huge(41, std::vector<std::uint32_t>(20, 0xffffffffU));
  CHECK_THROWS_AS((void)huge.size(), std::overflow_error);
}

TEST_CASE("ordering") {
  CHECK(rk(3, 0) < rk(0, 1));
  CHECK(RankDomain::compare(rk(2, 1), rk(0, 1), 3) == std::strong_ordering::equal);
  CHECK(RankDomain::compare(rk(2, 1), rk(0, 1), 0) == std::strong_ordering::greater);
  CHECK(rk(3, 1) < ex1_full().top());
  CHECK(ex1_full().top() == ex1_full().top());
  CHECK(rk(3, 1).to_string() == "(3,1)");
  CHECK(ex1_full().top().to_string() == "TOP");
}

TEST_CASE("increment and decrement examples") {
  const RankDomain d = ex1_full();
  CHECK(d.incr(rk(3, 0)) == rk(0, 1));
  CHECK(d.incr(rk(3, 1)).is_top());
  CHECK(ex1_bounded(1).incr(rk(1, 0)) == rk(0, 1));
  CHECK(d.incr_ell(rk(0, 0), 1) == rk(1, 0));
  CHECK(d.incr_ell(rk(0, 0), 3) == rk(0, 1));
  CHECK(d.incr_ell(rk(0, 1), 4) == rk(0, 0));
  CHECK(d.incr_ell(rk(3, 1), 1).is_top());
  CHECK(d.decr_ell(rk(1, 0), 1) == rk(0, 0));
  CHECK(d.decr_ell(rk(0, 1), 3) == rk(0, 0));
  CHECK(d.decr_ell(d.top(), 1) == rk(3, 1));
  CHECK(d.decr_ell(d.top(), 3) == rk(0, 1));
  CHECK(d.decr(rk(0, 1)) == rk(3, 0));
  CHECK(d.decr(d.top()) == rk(3, 1));
  CHECK(d.decr(rk(0, 0)) == rk(0, 0));
}

TEST_CASE("incr and decr walk the enumeration") {
  for (std::optional<std::uint32_t> h : {std::optional<std::uint32_t>{}, std::optional<std::uint32_t>{2}}) {
    const RankDomain d(7, {2, 0, 3}, h);
    const auto all = d.enumerate();
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      CHECK(d.incr(all[i]) == all[i + 1]);
      CHECK(d.decr(all[i + 1]) == all[i]);
      CHECK(d.contains(all[i]));
    }
  }
}

TEST_CASE("projected operators match their definitions") {
  const std::vector<RankDomain> domains = {
      ex1_full(), ex1_bounded(1), ex1_bounded(2), RankDomain(7, {2, 1, 3}),
      RankDomain(7, {2, 1, 3}, 3), RankDomain(6, {1, 2, 2}, 2), RankDomain(5, {0, 2})};
  for (const auto& d : domains) {
    for (const Rank& r : d.enumerate()) {
      for (Priority ell = 0; ell < d.priority_count(); ++ell) {
        CAPTURE(r.to_string());
        CAPTURE(ell);
        CHECK(d.incr_ell(r, ell) == brute_incr_ell(d, r, ell));
        if (ell % 2 == 1) CHECK(d.decr_ell(r, ell) == brute_decr_ell(d, r, ell));
      }
    }
  }
}
