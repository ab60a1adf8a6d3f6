#include <doctest.h>

#include <algorithm>
#include <random>

#include "graft/core.hpp"
#include "graft/enumerate.hpp"
#include "graft/errors.hpp"
#include "graft/oracle.hpp"
#include "test_support.hpp"

using namespace graft;
using test::make;

TEST_CASE("build_multigraph keeps positional edge ids, loops, parallels") {
  Multigraph k2 = build_multigraph({"u", "v"}, {{"u", "v"}});
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.ends(0) == std::pair<VertexId, VertexId>{0, 1});

  Multigraph loop = build_multigraph({"a"}, {{"a", "a"}});
  CHECK(loop.is_loop(0));

  Multigraph par = build_multigraph({"u", "v"}, {{"u", "v"}, {"u", "v"}});
  CHECK(par.edge_count() == 2);
  CHECK(par.ends(0) == par.ends(1));

  CHECK_THROWS_AS(build_multigraph({"u", "u"}, {}), InputError);
  CHECK_THROWS_AS(build_multigraph({"u"}, {{"u", "w"}}), InputError);
}

TEST_CASE("cut picks crossing edges and ignores loops") {
  Multigraph k2 = build_multigraph({"u", "v"}, {{"u", "v"}});
  CHECK(cut(k2, {0}).ids() == std::vector<EdgeId>{0});

  Multigraph loop = build_multigraph({"a"}, {{"a", "a"}});
  CHECK(cut(loop, {0}).empty());

  Multigraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(cut(p4, {1, 2}).ids() == std::vector<EdgeId>{0, 2});

  CHECK_THROWS_AS(cut(k2, {7}), InputError);
}

TEST_CASE("cut of a set equals cut of its complement") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 30; ++round) {
    int n = 1 + int(rng() % 6);
    int m = int(rng() % 10);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < m; ++i)
      edges.emplace_back(int(rng() % n), int(rng() % n));
    Multigraph g(n, edges);
    std::vector<VertexId> x, complement;
    for (VertexId v = 0; v < n; ++v)
      (rng() % 2 ? x : complement).push_back(v);
    CHECK(cut(g, x) == cut(g, complement));
  }
}

TEST_CASE("neighbors") {
  Multigraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(neighbors(p4, {1}) == std::vector<VertexId>{0, 2});
  CHECK(neighbors(p4, {0, 1}) == std::vector<VertexId>{2});

  Multigraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(neighbors(star, {0}) == std::vector<VertexId>{1, 2, 3, 4});
}

TEST_CASE("validate_graft enforces per-component parity") {
  CHECK_NOTHROW(make(2, {{0, 1}}, {0, 1}));
  CHECK_THROWS_AS(make(2, {{0, 1}}, {0}), OddComponentError);
  // Two disjoint edges, one terminal in each: globally even, per-component
  // odd.
  CHECK_THROWS_AS(make(4, {{0, 1}, {2, 3}}, {0, 2}), OddComponentError);
  try {
    make(4, {{0, 1}, {2, 3}}, {0, 2});
  } catch (const OddComponentError& e) {
    CHECK(e.component == std::vector<VertexId>{0, 1});
  }
}

TEST_CASE("weight is count outside F minus count inside F") {
  EdgeSet f(5), s(5);
  for (EdgeId e : {0, 1, 2}) s.insert(e);
  CHECK(weight(f, s) == 3);
  EdgeSet f2 = EdgeSet::from_ids(5, {0, 1});
  CHECK(weight(f2, f2) == -2);

  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    EdgeSet a(8), b(8);
    for (EdgeId e = 0; e < 8; ++e) {
      if (rng() % 2) a.insert(e);
      if (rng() % 2) b.insert(e);
    }
    int outside = (b.count() - (a & b).count());
    CHECK(weight(a, b) == outside - (a & b).count());
  }
}

TEST_CASE("is_join matches the odd-degree law; loops count twice") {
  Graft k2 = make(2, {{0, 1}}, {0, 1});
  CHECK(is_join(k2, EdgeSet::from_ids(1, {0})));
  CHECK_FALSE(is_join(k2, EdgeSet(1)));

  Graft c4 = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {0, 1, 2, 3});
  CHECK(is_join(c4, EdgeSet::from_ids(4, {0, 2})));
  CHECK_FALSE(is_join(c4, EdgeSet::from_ids(4, {0, 1})));

  Graft looped = make(1, {{0, 0}}, {});
  CHECK(is_join(looped, EdgeSet::from_ids(1, {0})));  // degree 2, even
}

TEST_CASE("is_join is invariant under vertex relabeling") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 20; ++round) {
    int n = 2 + int(rng() % 4);
    int m = 1 + int(rng() % 8);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < m; ++i)
      edges.emplace_back(int(rng() % n), int(rng() % n));
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    Multigraph g(n, edges);
    std::vector<std::pair<VertexId, VertexId>> mapped;
    for (auto [u, v] : edges) mapped.emplace_back(perm[u], perm[v]);
    Multigraph h(n, mapped);

    std::vector<VertexId> t, mapped_t;
    for (VertexId v = 0; v < n; ++v)
      if (rng() % 2) {
        t.push_back(v);
        mapped_t.push_back(perm[v]);
      }
    Graft gt{g, t};
    std::sort(mapped_t.begin(), mapped_t.end());
    Graft ht{h, mapped_t};
    for (std::uint64_t mask = 0; mask < (1u << m); ++mask) {
      EdgeSet f = EdgeSet::from_mask(m, mask);
      CHECK(is_join(gt, f) == is_join(ht, f));
    }
  }
}

TEST_CASE("flipping any circuit preserves joins") {
  int exercised = 0;
  for (int round = 0; round < 25; ++round) {
    Graft graft = gen::gen_random_graft(2 + round % 5, 2 + (round * 3) % 9,
                                        0.5, 3700 + round);
    auto joins = oracle::enumerate_joins(graft);
    std::vector<Walk> circuits;
    enumerate_circuits(graft.graph, -1, 1'000'000,
                       [&](const Walk& w) { circuits.push_back(w); });
    for (const auto& f : joins)
      for (const auto& c : circuits) {
        EdgeSet flipped = f;
        for (EdgeId e : c.edges) flipped.flip(e);
        CHECK(is_join(graft, flipped));
        ++exercised;
      }
  }
  CHECK(exercised > 0);
}

TEST_CASE("is_ear on paths and circuits") {
  Multigraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  Walk whole = test::path_walk({0, 1, 2, 3}, {0, 1, 2});
  CHECK(is_ear(p4, {0, 3}, whole));
  CHECK_FALSE(is_ear(p4, {0, 2}, whole));

  Multigraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Walk circuit = test::circuit_walk({0, 1, 2, 3, 0}, {0, 1, 2, 3});
  CHECK(is_ear(c4, {0}, circuit));
  CHECK_FALSE(is_ear(c4, {0, 2}, circuit));
}

TEST_CASE("is_balanced alternates at interior vertices") {
  Multigraph p3(3, {{0, 1}, {1, 2}});
  EdgeSet second = EdgeSet::from_ids(2, {1});
  CHECK(is_balanced(test::path_walk({0, 1}, {0}), second));
  CHECK(is_balanced(test::path_walk({0, 1, 2}, {0, 1}), second));
  EdgeSet both = EdgeSet::from_ids(2, {0, 1});
  CHECK_FALSE(is_balanced(test::path_walk({0, 1, 2}, {0, 1}), both));
}

TEST_CASE("validate_walk rejects malformed walks") {
  Multigraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(validate_walk(p4, test::path_walk({0, 2}, {0})),
                  InputError);
  CHECK_THROWS_AS(validate_walk(p4, test::path_walk({0, 1, 0}, {0, 0})),
                  InputError);
  CHECK_THROWS_AS(
      validate_walk(p4, test::circuit_walk({0, 1, 2}, {0, 1})),
      InputError);
  CHECK_NOTHROW(validate_walk(p4, test::path_walk({1, 2, 3}, {1, 2})));
}
