#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "graft/decomposition.hpp"

namespace graft {
namespace gen {

// Deterministic instance construction: named desk instances, constructive
// comb families, and seeded random grafts. Identical parameters always
// produce byte-identical instances.

// Fixed instances exercising every decomposition feature: "k2", "p4", "c4",
// "c8", "star-4", "two-pendant", "chain", "eared-c4".
std::map<std::string, Graft> named_instances();

// Seeded uniform multigraph (loops and parallels allowed) with terminals
// sampled per-vertex and repaired to even per-component parity by dropping
// the smallest-id terminal of every odd component.
Graft gen_random_graft(int n, int m, double t_prob, std::uint64_t seed);

struct CombSample {
  Graft graft;
  CombDesignation designation;
};

// Rejection-samples bipartite grafts with side sizes nA/nB until some
// designation with nB teeth qualifies; throws ExhaustedError after
// max_tries rejections.
CombSample gen_comb_random(int nA, int nB, int m, std::uint64_t seed,
                           int max_tries, const EngineOptions& opt = {});

// Constructive families that are combs by construction.
Graft path_graft(int n);   // even path, terminals everywhere
Graft cycle_graft(int n);  // even cycle, terminals everywhere
Graft star_graft(int teeth);  // even tooth count, center not a terminal

}  // namespace gen
}  // namespace graft
