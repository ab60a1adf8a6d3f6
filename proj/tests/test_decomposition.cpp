#include <doctest.h>

#include <numeric>

#include "graft/decomposition.hpp"
#include "graft/errors.hpp"
#include "graft/oracle.hpp"
#include "test_support.hpp"

using namespace graft;
using test::make;
using test::named;
using test::vid;

namespace {

std::vector<std::vector<VertexId>> component_vertex_sets(
    const std::vector<FactorComponent>& comps) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& c : comps) out.push_back(c.vertices);
  return out;
}

}  // namespace

TEST_CASE("factor_components goldens") {
  auto c4 = factor_components(named("c4"));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].vertices == std::vector<VertexId>{0, 1, 2, 3});

  auto p4 = factor_components(named("p4"));
  CHECK(component_vertex_sets(p4) ==
        std::vector<std::vector<VertexId>>{{0, 1}, {2, 3}});

  auto with_isolated = factor_components(make(3, {{0, 1}}, {0, 1}));
  CHECK(component_vertex_sets(with_isolated) ==
        std::vector<std::vector<VertexId>>{{0, 1}, {2}});
}

TEST_CASE("kl_partition goldens") {
  Graft c4 = named("c4");
  auto kl = kl_partition(c4);
  CHECK(kl.classes ==
        std::vector<std::vector<VertexId>>{{vid(c4, "a1"), vid(c4, "a2")},
                                           {vid(c4, "b1"), vid(c4, "b2")}});

  auto star = kl_partition(named("star-4"));
  CHECK(star.classes.size() == 5);  // all singletons

  auto k2 = kl_partition(named("k2"));
  CHECK(k2.classes.size() == 2);

  // Classes stay inside one factor-component.
  Graft chain = named("chain");
  InstanceAnalysis a(chain);
  for (const auto& cls : a.kl().classes) {
    for (VertexId v : cls)
      CHECK(a.component_of(v) == a.component_of(cls.front()));
  }
}

TEST_CASE("comb_designations goldens") {
  auto k2 = comb_designations(named("k2"));
  CHECK(k2.size() == 2);

  auto star = comb_designations(named("star-4"));
  REQUIRE(star.size() == 1);
  CHECK(star[0].spine == std::vector<VertexId>{0});
  CHECK(star[0].tooth == std::vector<VertexId>{1, 2, 3, 4});

  Graft triangle = make(3, {{0, 1}, {1, 2}, {2, 0}}, {});
  CHECK(comb_designations(triangle).empty());

  Graft looped = make(1, {{0, 0}}, {});
  CHECK(comb_designations(looped).empty());
}

TEST_CASE("comb characterization holds for qualifying designations") {
  for (const char* name : {"k2", "c4", "p4", "star-4", "two-pendant",
                           "chain", "eared-c4"}) {
    Graft g = named(name);
    auto designations = comb_designations(g);
    REQUIRE_MESSAGE(!designations.empty(), name);
    for (const auto& d : designations)
      CHECK_MESSAGE(verify_comb_characterization(g, d), name);
  }
}

TEST_CASE("dm_relation on the path") {
  Graft p4 = named("p4");
  auto designations = comb_designations(p4);
  REQUIRE(designations.size() == 2);
  REQUIRE(designations[0].spine == std::vector<VertexId>{0, 2});

  DMPoset p = dm_relation(p4, designations[0]);
  REQUIRE(p.components.size() == 2);
  CHECK(p.closure[0][1]);
  CHECK_FALSE(p.closure[1][0]);
  CHECK(p.hasse == std::vector<std::pair<int, int>>{{0, 1}});

  // The opposite designation flips the order.
  DMPoset q = dm_relation(p4, designations[1]);
  CHECK(q.closure[1][0]);
  CHECK_FALSE(q.closure[0][1]);
}

TEST_CASE("dm_relation on the square and the pendants") {
  Graft c4 = named("c4");
  DMPoset square = dm_relation(c4, comb_designations(c4)[0]);
  CHECK(square.components.size() == 1);
  CHECK(square.hasse.empty());

  Graft tp = named("two-pendant");
  DMPoset p = dm_relation(tp, comb_designations(tp)[0]);
  REQUIRE(p.components.size() == 3);
  CHECK(p.closure[0][1]);
  CHECK(p.closure[0][2]);
  CHECK_FALSE(p.closure[1][2]);
  CHECK_FALSE(p.closure[2][1]);
}

TEST_CASE("dm_relation rejects non-comb designations") {
  Graft p4 = named("p4");
  CombDesignation bogus;
  bogus.spine = {0, 1};
  bogus.tooth = {2, 3};
  CHECK_THROWS_AS(dm_relation(p4, bogus), NotCombError);
}

TEST_CASE("upper_bounds") {
  Graft p4 = named("p4");
  DMPoset p = dm_relation(p4, comb_designations(p4)[0]);
  CHECK(upper_bounds(p, 0) == std::vector<int>{1});
  CHECK(upper_bounds(p, 1).empty());

  Graft tp = named("two-pendant");
  DMPoset q = dm_relation(tp, comb_designations(tp)[0]);
  CHECK(upper_bounds(q, 0) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(upper_bounds(q, 9), InputError);
}

TEST_CASE("defining_sequence") {
  Graft p4 = named("p4");
  DMPoset p = dm_relation(p4, comb_designations(p4)[0]);
  CHECK(defining_sequence(p, 0, 1) == std::vector<int>{0, 1});
  CHECK_THROWS_AS(defining_sequence(p, 0, 0), NotRelatedError);
  CHECK_THROWS_AS(defining_sequence(p, 1, 0), NotRelatedError);

  // E1 hangs off D1 only, so the walk to it passes through D1.
  Graft chain = named("chain");
  DMPoset q = dm_relation(chain, comb_designations(chain)[0]);
  REQUIRE(q.components.size() == 4);
  CHECK(defining_sequence(q, 0, 3) == std::vector<int>{0, 1, 3});
}

TEST_CASE("attributes of the pendants, the chain, and the path") {
  Graft tp = named("two-pendant");
  InstanceAnalysis a(tp);
  auto d = comb_designations(tp)[0];
  DMPoset p = dm_relation(a, d);
  AttributeMap am = attributes(a, d, p, 0);
  REQUIRE(am.attribute.size() == 2);
  const auto& kl = a.kl();
  CHECK(kl.classes[am.attribute[0].second] ==
        std::vector<VertexId>{vid(tp, "b1")});
  CHECK(kl.classes[am.attribute[1].second] ==
        std::vector<VertexId>{vid(tp, "b2")});
  CHECK(am.attribute[0].second != am.attribute[1].second);
  CHECK(am.buckets.size() == 2);

  Graft chain = named("chain");
  InstanceAnalysis ca(chain);
  auto cd = comb_designations(chain)[0];
  DMPoset cp = dm_relation(ca, cd);
  AttributeMap cam = attributes(ca, cd, cp, 0);
  REQUIRE(cam.attribute.size() == 3);
  int e1_class = -1, d1_class = -1;
  for (auto [comp, cls] : cam.attribute) {
    if (comp == 1) d1_class = cls;
    if (comp == 3) e1_class = cls;
  }
  CHECK(e1_class == d1_class);  // propagated through D1
  CHECK(ca.kl().classes[e1_class] ==
        std::vector<VertexId>{vid(chain, "b1")});

  Graft p4 = named("p4");
  InstanceAnalysis pa(p4);
  auto pd = comb_designations(p4)[0];
  DMPoset pp = dm_relation(pa, pd);
  AttributeMap pam = attributes(pa, pd, pp, 0);
  REQUIRE(pam.attribute.size() == 1);
  CHECK(pa.kl().classes[pam.attribute[0].second] ==
        std::vector<VertexId>{vid(p4, "v2")});
}

TEST_CASE("classic_dm goldens") {
  DMPoset c4 = classic_dm(Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  CHECK(c4.components.size() == 1);

  DMPoset p4 = classic_dm(Multigraph(4, {{0, 1}, {1, 2}, {2, 3}}));
  REQUIRE(p4.components.size() == 2);
  CHECK(p4.hasse.size() == 1);

  DMPoset c6 = classic_dm(
      Multigraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
  CHECK(c6.components.size() == 1);
  CHECK(c6.hasse.empty());

  CHECK_THROWS_AS(classic_dm(Multigraph(3, {{0, 1}, {1, 2}, {2, 0}})),
                  NotBipartiteError);
  CHECK_THROWS_AS(classic_dm(Multigraph(3, {{0, 1}, {1, 2}})),
                  NotFactorizableError);
  // Even order but no perfect matching.
  CHECK_THROWS_AS(classic_dm(Multigraph(4, {{0, 1}, {0, 2}, {0, 3}})),
                  NotFactorizableError);
}

TEST_CASE("classic_dm agrees with the one-factor construction on C6") {
  Multigraph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  auto factors = oracle::enumerate_one_factors(c6);
  CHECK(factors.size() == 2);
  EdgeSet allowed(c6.edge_count());
  for (const auto& f : factors) allowed |= f;
  CHECK(allowed.count() == 6);  // every edge sits in some one-factor
}
