#pragma once

#include "graft/core.hpp"

namespace graft {
namespace tjoin {

// Exact minimum-join engine. nu is computed by all-pairs breadth-first
// distances among the terminals followed by an exact minimum-weight perfect
// matching over terminal subsets (O(2^|T| |T|) dynamic program); a concrete
// join is realized as the symmetric difference of the matched pairs'
// lexicographically least shortest paths. Everything is deterministic: ties
// break by (vertex id, edge id) throughout.

struct MinJoinResult {
  int nu = 0;
  EdgeSet join;
};

struct PathWitness {
  Walk walk;
  int weight = 0;
};

// Size of a minimum join; 0 iff T is empty. Throws CapExceededError when
// |T| exceeds opt.max_terminals.
int nu(const Graft& g, const EngineOptions& opt = {});

MinJoinResult min_join(const Graft& g, const EngineOptions& opt = {});

// True iff some minimum join contains e, via the forced-edge recomputation
// nu(G - e, T ^ ends(e)) == nu(G, T) - 1. Loops are never allowed.
bool is_allowed(const Graft& g, EdgeId e, const EngineOptions& opt = {});

EdgeSet allowed_edges(const Graft& g, const EngineOptions& opt = {});

// Minimum join-weight of a simple x-y path, independent of the minimum
// join. Computed as nu(G, T ^ {x,y}) - nu(G, T); dist(x, x) is 0 by
// convention. Throws DisconnectedError when no x-y path exists.
int dist(const Graft& g, VertexId x, VertexId y,
         const EngineOptions& opt = {});

// A concrete simple x-y path attaining dist(g, x, y), extracted from the
// symmetric difference of the reference minimum joins of (G, T) and
// (G, T ^ {x,y}). Requires x != y.
PathWitness shortest_path_witness(const Graft& g, VertexId x, VertexId y,
                                  const EngineOptions& opt = {});

}  // namespace tjoin
}  // namespace graft
