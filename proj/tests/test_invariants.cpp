#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "graft/enumerate.hpp"
#include "graft/errors.hpp"
#include "graft/tjoin.hpp"
#include "graft/verifier.hpp"
#include "test_support.hpp"

using namespace graft;
using test::make;
using test::named;

TEST_CASE("minimum joins never use loops") {
  Graft looped = make(4, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 3}, {2, 2}},
                      {0, 3});
  auto result = tjoin::min_join(looped);
  for (EdgeId e : result.join.ids()) CHECK_FALSE(looped.graph.is_loop(e));
  CHECK(result.nu == 3);  // forced chain 0-1-2-3
}

TEST_CASE("spine vertices of one component form one class; tooth pairs "
          "split by distance") {
  for (const char* name : {"c4", "c8", "star-4", "two-pendant", "chain",
                           "eared-c4"}) {
    Graft g = named(name);
    CAPTURE(name);
    InstanceAnalysis a(g);
    auto d = comb_designations(g).front();
    for (const auto& c : a.components()) {
      std::vector<VertexId> spine, tooth;
      for (VertexId v : c.vertices)
        (d.in_spine(v) ? spine : tooth).push_back(v);
      for (VertexId v : spine)
        CHECK(a.kl().class_of[v] == a.kl().class_of[spine.front()]);
      for (size_t i = 0; i < tooth.size(); ++i)
        for (size_t j = i + 1; j < tooth.size(); ++j) {
          bool same = a.kl().class_of[tooth[i]] == a.kl().class_of[tooth[j]];
          int dist = a.dist(tooth[i], tooth[j]);
          CHECK(same == (dist == 0));
          CHECK(!same == (dist == -2));
        }
    }
  }
}

TEST_CASE("attribute buckets survive vertex relabeling") {
  // two-pendant with vertices listed in a scrambled order.
  Graft scrambled = gen::named_instances().at("two-pendant");
  std::vector<std::string> labels{"y2", "b1", "x1", "a0", "b2", "x2", "y1"};
  std::vector<std::pair<std::string, std::string>> edges{
      {"a0", "b1"}, {"a0", "b2"}, {"x1", "y1"},
      {"x2", "y2"}, {"x1", "b1"}, {"x2", "b2"}};
  Graft permuted = validate_graft(
      build_multigraph(labels, edges),
      {1, 2, 4, 5, 6, 0});  // terminals by new ids: b1,x1,b2,x2,y1,y2

  auto bucket_shape = [](const Graft& g) {
    InstanceAnalysis a(g);
    auto d = comb_designations(g).front();
    DMPoset p = dm_relation(a, d);
    std::vector<std::vector<int>> shape;
    for (int c0 = 0; c0 < static_cast<int>(p.components.size()); ++c0) {
      if (upper_bounds(p, c0).empty()) continue;
      AttributeMap am = attributes(a, d, p, c0);
      std::vector<int> sizes;
      for (const auto& [cls, comps] : am.buckets)
        sizes.push_back(static_cast<int>(comps.size()));
      std::sort(sizes.begin(), sizes.end());
      shape.push_back(std::move(sizes));
    }
    return shape;
  };
  CHECK(bucket_shape(scrambled) == bucket_shape(permuted));
}

TEST_CASE("ear enumeration equals path enumeration filtered by is_ear") {
  long compared = 0;
  for (int i = 0; i < 150; ++i) {
    Graft g = gen::gen_random_graft(3 + i % 7, 2 + (i * 7) % 14, 0.4,
                                    700'000 + i);
    int n = g.graph.vertex_count();
    std::vector<char> anchor(n, 0);
    std::vector<VertexId> anchor_list;
    for (VertexId v = 0; v < n; v += 2) {
      anchor[v] = 1;
      anchor_list.push_back(v);
    }
    using Rec = std::pair<std::vector<VertexId>, std::vector<EdgeId>>;
    std::vector<Rec> direct, filtered;
    enumerate_ears(g.graph, anchor, 8, 2'000'000, [&](const Walk& w) {
      direct.emplace_back(w.vertices, w.edges);
    });
    for (VertexId s : anchor_list)
      enumerate_paths_from(g.graph, s, 8, 2'000'000, [&](const Walk& w) {
        if (w.vertices.back() <= s || w.edges.size() < 2) return;
        if (!is_ear(g.graph, anchor_list, w)) return;
        filtered.emplace_back(w.vertices, w.edges);
      });
    std::sort(direct.begin(), direct.end());
    std::sort(filtered.begin(), filtered.end());
    CHECK(direct == filtered);
    compared += static_cast<long>(direct.size());
  }
  CHECK(compared > 0);
}

TEST_CASE("defining sequences are distinct, base-linked, and shortest") {
  long validated = 0;
  for (int k = 0; k < 400; ++k) {
    gen::CombSample s;
    try {
      s = gen::gen_comb_random(1 + k % 4, 1 + (k / 4) % 4, 3 + k % 10,
                               800'000 + k, 40);
    } catch (const ExhaustedError&) {
      continue;
    }
    DMPoset p = dm_relation(s.graft, s.designation);
    int n = static_cast<int>(p.components.size());
    for (int c1 = 0; c1 < n; ++c1)
      for (int c2 = 0; c2 < n; ++c2) {
        if (c1 == c2 || !p.closure[c1][c2]) continue;
        auto seq = defining_sequence(p, c1, c2);
        ++validated;
        CHECK(seq.front() == c1);
        CHECK(seq.back() == c2);
        auto sorted = seq;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) ==
              sorted.end());
        for (size_t i = 0; i + 1 < seq.size(); ++i)
          CHECK(p.base[seq[i]][seq[i + 1]]);
        std::vector<int> level(n, -1);
        level[c1] = 0;
        std::vector<int> queue{c1};
        for (size_t h = 0; h < queue.size(); ++h)
          for (int j = 0; j < n; ++j)
            if (j != queue[h] && p.base[queue[h]][j] && level[j] < 0) {
              level[j] = level[queue[h]] + 1;
              queue.push_back(j);
            }
        CHECK(static_cast<int>(seq.size()) == level[c2] + 1);
      }
  }
  CHECK(validated > 0);
}

TEST_CASE("tooth-terminal qualification equals the oracle characterization") {
  long compared = 0;
  for (int i = 0; i < 400; ++i) {
    std::mt19937_64 rng(123'000 + i);
    int na = 1 + i % 4, nb = 1 + (i / 4) % 4;
    std::vector<std::pair<VertexId, VertexId>> edges;
    int m = static_cast<int>(rng() % 10);
    for (int e = 0; e < m; ++e)
      edges.emplace_back(static_cast<int>(rng() % na),
                         na + static_cast<int>(rng() % nb));
    Multigraph mg(na + nb, edges);
    std::vector<char> cand(na + nb, 0);
    for (int v = 0; v < na + nb; ++v) cand[v] = rng() % 2;
    auto comp = mg.component_ids();
    std::vector<int> parity(na + nb, 0);
    for (int v = 0; v < na + nb; ++v)
      if (cand[v]) parity[comp[v]] ^= 1;
    std::vector<VertexId> t;
    for (int v = 0; v < na + nb; ++v) {
      if (cand[v] && parity[comp[v]]) {
        parity[comp[v]] = 0;
        continue;
      }
      if (cand[v]) t.push_back(v);
    }
    Graft g = validate_graft(mg, t);
    auto color = mg.bipartition();
    int nu = tjoin::nu(g);
    for (int tooth_color : {0, 1}) {
      CombDesignation d;
      for (VertexId v = 0; v < mg.vertex_count(); ++v)
        (color[v] == tooth_color ? d.tooth : d.spine).push_back(v);
      bool algebraic = nu == static_cast<int>(d.tooth.size());
      for (VertexId v : d.tooth) algebraic = algebraic && g.is_terminal(v);
      bool characterization = nu == static_cast<int>(d.tooth.size()) &&
                              verify_comb_characterization(g, d);
      CHECK(algebraic == characterization);
      ++compared;
    }
  }
  CHECK(compared > 0);
}

TEST_CASE("verify reports caps distinctly") {
  auto results = verify::verify_all(named("c8"), [] {
    EngineOptions opt;
    opt.max_terminals = 4;
    return opt;
  }());
  bool saw_cap = false;
  for (const auto& r : results)
    saw_cap |= r.status == verify::CheckResult::Status::cap_exceeded;
  CHECK(saw_cap);
}
