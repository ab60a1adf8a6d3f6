#pragma once

#include <functional>

#include "graft/core.hpp"

namespace graft {

// Shared depth-first enumerators for simple paths and circuits. Every
// enumerator counts extensions against `budget` and throws CapExceededError
// when the budget runs out, so oversized instances fail fast instead of
// spinning.

using WalkCallback = std::function<void(const Walk&)>;

// Every simple path with >= 1 edge whose first vertex is `start`, longest
// first extended depth-first; prefixes are reported as paths of their own.
// max_edges < 0 means unbounded (the vertex count still bounds depth).
void enumerate_paths_from(const Multigraph& g, VertexId start, int max_edges,
                          long budget, const WalkCallback& cb);

// Same, but no vertex after `start` may touch the forbidden mask.
void enumerate_paths_avoiding(const Multigraph& g, VertexId start,
                              const std::vector<char>& forbidden,
                              int max_edges, long budget,
                              const WalkCallback& cb);

// Each circuit exactly once: rooted at its smallest vertex, loops included,
// orientation fixed by first edge id < closing edge id.
void enumerate_circuits(const Multigraph& g, int max_edges, long budget,
                        const WalkCallback& cb);

// Paths whose ends both lie in `anchor` while every interior vertex avoids
// it, with at least one interior vertex. Reported once per end pair
// (smaller end first).
void enumerate_ears(const Multigraph& g, const std::vector<char>& anchor,
                    int max_edges, long budget, const WalkCallback& cb);

std::string fingerprint(const Graft& g);

}  // namespace graft
