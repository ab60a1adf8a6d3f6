#pragma once

#include <vector>

#include "graft/multigraph.hpp"

namespace graft {

// Multigraph with a terminal set whose per-component parity is even. Build
// through validate_graft (or the generators, which guarantee the invariant).
struct Graft {
  Multigraph graph;
  std::vector<VertexId> terminals;  // sorted, no duplicates

  bool is_terminal(VertexId v) const {
    return std::binary_search(terminals.begin(), terminals.end(), v);
  }
};

// Alternating vertex/edge sequence. A Path visits distinct vertices; a
// Circuit additionally closes up (first vertex = last vertex). Walks store
// edge ids so parallel-edge routes stay unambiguous.
struct Walk {
  enum class Kind { path, circuit };
  Kind kind = Kind::path;
  std::vector<VertexId> vertices;  // edges.size() + 1 entries
  std::vector<EdgeId> edges;
};

// Size caps shared across the engine, oracle, and verifier. All are knobs;
// the defaults keep every operation interactive at desk scale.
struct EngineOptions {
  int max_terminals = 20;       // |T| cap for the subset-DP engine
  int max_oracle_edges = 20;    // |E| cap for exhaustive 2^|E| scans
  int max_path_edges = 12;      // path/circuit length cap in enumerations
  long max_enumerated = 5'000'000;  // walk budget per enumeration pass
};

// Throws InputError if the walk is not a valid path/circuit of G.
void validate_walk(const Multigraph& g, const Walk& w);

// Edges with exactly one endpoint in X; loops never qualify.
EdgeSet cut(const Multigraph& g, const std::vector<VertexId>& x);
// Cut of a single vertex.
EdgeSet vertex_cut(const Multigraph& g, VertexId v);

// Vertices outside X adjacent to X.
std::vector<VertexId> neighbors(const Multigraph& g,
                                const std::vector<VertexId>& x);

// Checks the per-component terminal parity and assembles a Graft; throws
// OddComponentError with the offending component otherwise.
Graft validate_graft(const Multigraph& g, std::vector<VertexId> terminals);

// Sum over S of -1 for edges in F and +1 otherwise.
int weight(const EdgeSet& f, const EdgeSet& s);
// Same, over the walk's edge sequence.
int weight(const EdgeSet& f, const Walk& w);

// True iff F's degree at v is odd exactly when v is a terminal. A loop adds
// two to its vertex's degree, so loops never affect parity.
bool is_join(const Graft& g, const EdgeSet& f);

// True iff w is a path with both ends in X and interior disjoint from X, or
// a circuit meeting X in exactly one vertex.
bool is_ear(const Multigraph& g, const std::vector<VertexId>& x,
            const Walk& w);

// True iff every vertex of walk-degree >= 2 has exactly one incident
// walk-edge in F and one outside.
bool is_balanced(const Walk& w, const EdgeSet& f);

}  // namespace graft
