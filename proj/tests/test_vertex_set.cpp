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

#include <random>

#include "common.hpp"
#include "corpus.hpp"

using namespace symparity;
using namespace symparity::testing;

namespace {

struct Config {
  BackendKind kind;
  GraphKernel kernel;
  const char* label;
};

const Config kConfigs[] = {
    {BackendKind::Bits, GraphKernel::Dense, "bits/dense"},
    {BackendKind::Bits, GraphKernel::Sparse, "bits/sparse"},
    {BackendKind::Bdd, GraphKernel::Auto, "bdd"},
};

VertexList random_subset(std::mt19937_64& rng, std::size_t n) {
  VertexList out;
  for (Vertex v = 0; v < n; ++v) {
    if (rng() % 2) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("set algebra on ex1") {
  for (const auto& cfg : kConfigs) {
    CAPTURE(cfg.label);
    SymbolicGame sg(ex1(), cfg.kind, cfg.kernel);
    const VertexSet ab = sg.from(vs("ab"));
    const VertexSet eg = sg.from(vs("eg"));
    CHECK(sg.members(sg.unite(ab, eg)) == vs("abeg"));
    CHECK(sg.members(sg.subtract(sg.all(), ab)) == vs("cdefgh"));
    CHECK(sg.members(sg.intersect(ab, eg)).empty());
    CHECK(sg.is_empty(sg.intersect(ab, eg)));
    CHECK(sg.subset(ab, sg.all()));
    CHECK_FALSE(sg.subset(sg.all(), ab));
    CHECK(sg.equal(ab, sg.from(vs("ba"))));
    CHECK(sg.count(sg.all()) == 8);
    CHECK(sg.contains(eg, G));
    CHECK_FALSE(sg.contains(eg, H));
    CHECK(sg.members(sg.complement(ab)) == vs("cdefgh"));
  }
}

TEST_CASE("pre and cpre on ex1") {
  for (const auto& cfg : kConfigs) {
    CAPTURE(cfg.label);
    SymbolicGame sg(ex1(), cfg.kind, cfg.kernel);
    CHECK(sg.members(sg.pre(sg.singleton(F))) == vs("d"));
    CHECK(sg.members(sg.pre(sg.singleton(B))) == vs("ac"));
    const VertexSet odd_all = sg.cpre(Player::Odd, sg.all());
    CHECK(sg.members(sg.intersect(odd_all, sg.priority_set(1))) == vs("ach"));
    CHECK(sg.members(sg.cpre(Player::Even, sg.singleton(F))) == vs("d"));

    // inside {d,e,f,g} the Even cpre of {d} is the Odd vertex e (its only move)
    const VertexSet m = sg.from(vs("defg"));
    CHECK(sg.members(sg.cpre(Player::Even, sg.singleton(D), &m)) == vs("e"));
    // b's move to a leaves the mask {b,d}, so b cannot be forced there
    const VertexSet bd = sg.from(vs("bd"));
    CHECK(sg.members(sg.cpre(Player::Even, sg.singleton(D), &bd)) == vs("b"));
    CHECK(sg.members(sg.pre(sg.singleton(A), &bd)).empty());
  }
}

TEST_CASE("backends agree on random games") {
  std::mt19937_64 rng(17);
  const auto corpus = make_corpus({40, 1, 40, 1, 6, 5, 123});
  for (const auto& g : corpus) {
    SymbolicGame dense(g, BackendKind::Bits, GraphKernel::Dense);
    SymbolicGame sparse(g, BackendKind::Bits, GraphKernel::Sparse);
    SymbolicGame bdd(g, BackendKind::Bdd);
    for (int round = 0; round < 10; ++round) {
      const VertexList b = random_subset(rng, g.vertex_count());
      const VertexList m = random_subset(rng, g.vertex_count());
      std::vector<VertexList> pre, even, odd;
      for (SymbolicGame* sg : {&dense, &sparse, &bdd}) {
        const VertexSet bs = sg->from(b);
        const VertexSet ms = sg->from(m);
        VertexSet inside = sg->intersect(bs, ms);
        pre.push_back(sg->members(sg->pre(inside, &ms)));
        even.push_back(sg->members(sg->cpre(Player::Even, inside, &ms)));
        odd.push_back(sg->members(sg->cpre(Player::Odd, bs)));
      }
      CHECK(pre[0] == pre[1]);
      CHECK(pre[0] == pre[2]);
      CHECK(even[0] == even[1]);
      CHECK(even[0] == even[2]);
      CHECK(odd[0] == odd[1]);
      CHECK(odd[0] == odd[2]);
    }
    // reference cpre from the definition
    const VertexList b = random_subset(rng, g.vertex_count());
    VertexList expect;
    std::vector<bool> in(g.vertex_count(), false);
    for (Vertex v : b) in[v] = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto s = g.successors(v);
      const bool some = std::any_of(s.begin(), s.end(), [&](Vertex w) { return in[w]; });
      const bool all = std::all_of(s.begin(), s.end(), [&](Vertex w) { return in[w]; });
      if (g.owner(v) == Player::Even ? some : all) expect.push_back(v);
    }
    CHECK(dense.members(dense.cpre(Player::Even, dense.from(b))) == expect);
  }
}

TEST_CASE("large sparse universe") {
  const ParityGame g = gen_random(3000, 4, 1, 2, 5);
  SymbolicGame a(g, BackendKind::Bits, GraphKernel::Auto);
  SymbolicGame s(g, BackendKind::Bits, GraphKernel::Sparse);
  CHECK(std::string(a.backend().name()) == "bits/sparse");
  const VertexList some = {0, 7, 100, 2999};
  CHECK(a.members(a.cpre(Player::Odd, a.from(some))) == s.members(s.cpre(Player::Odd, s.from(some))));
}

TEST_CASE("every operation bumps exactly one counter") {
  SymbolicGame sg(ex1());
  sg.begin_run();
  const VertexSet x = sg.from(vs("ab"));
  const auto step = [&](auto&& op, std::uint64_t OpCounters::*field) {
    const OpCounters before = sg.counters();
    op();
    const OpCounters& after = sg.counters();
    CHECK(after.*field == before.*field + 1);
    CHECK(after.basic_ops() + after.one_step_ops() == before.basic_ops() + before.one_step_ops() + 1);
  };
  step([&] { (void)sg.unite(x, x); }, &OpCounters::unions);
  step([&] { (void)sg.intersect(x, x); }, &OpCounters::intersections);
  step([&] { (void)sg.subtract(x, x); }, &OpCounters::differences);
  step([&] { (void)sg.subset(x, x); }, &OpCounters::containment_tests);
  step([&] { (void)sg.equal(x, x); }, &OpCounters::equality_tests);
  step([&] { (void)sg.is_empty(x); }, &OpCounters::equality_tests);
  step([&] { (void)sg.contains(x, A); }, &OpCounters::containment_tests);
  step([&] { (void)sg.count(x); }, &OpCounters::cardinality_queries);
  step([&] { (void)sg.pre(x); }, &OpCounters::pre_ops);
  step([&] { (void)sg.cpre(Player::Odd, x); }, &OpCounters::cpre_ops);
}

TEST_CASE("live set accounting") {
  SymbolicGame sg(ex1());
  sg.begin_run();
  const auto base = sg.counters().live_sets;
  {
    VertexSet a = sg.from(vs("ab"));
    VertexSet b = a;
    VertexSet c = sg.unite(a, b);
    CHECK(sg.counters().live_sets == base + 3);
    VertexSet d = std::move(c);
    CHECK(sg.counters().live_sets == base + 3);
    sg.unite_in(d, a);
    CHECK(sg.counters().live_sets == base + 3);
  }
  CHECK(sg.counters().live_sets == base);
  CHECK(sg.counters().peak_live_sets == base + 3);
  // input sets are not counted
  VertexSet all = sg.all();
  CHECK(sg.counters().live_sets == base + 1);
}

TEST_CASE("counter snapshot restores counts") {
  SymbolicGame sg(ex1());
  const OpCounters before = sg.counters();
  {
    CounterSnapshot snap(sg);
    VertexSet x = sg.cpre(Player::Even, sg.all());
    (void)sg.unite(x, x);
  }
  CHECK(sg.counters().cpre_ops == before.cpre_ops);
  CHECK(sg.counters().unions == before.unions);
}

TEST_CASE("sets from different games do not mix") {
  SymbolicGame a(ex1());
  SymbolicGame b(ex1());
  const VertexSet x = a.singleton(A);
  CHECK_THROWS_AS((void)b.unite(x, b.all()), UniverseMismatch);
}
