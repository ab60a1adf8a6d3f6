#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "graft/core.hpp"

namespace graft {
namespace oracle {

// Exhaustive ground truth for small instances. Everything here is
// independent of the subset-DP engine; the engine is certified against
// these results. Hard caps fail fast with CapExceededError rather than
// silently truncating.

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

enum class ScanMode { serial, parallel };

// One cross-check row; match is simply oracle_value == engine_value.
struct OracleReport {
  std::string instance;
  std::string quantity;
  std::string oracle_value;
  std::string engine_value;
  bool match = false;
};

// All joins of g, sorted by (size, lexicographic id order).
std::vector<EdgeSet> enumerate_joins(const Graft& g,
                                     const EngineOptions& opt = {},
                                     ScanMode mode = ScanMode::serial);

struct BruteMinJoins {
  int nu = 0;
  std::vector<EdgeSet> joins;  // all minimum joins, lexicographic order
};
BruteMinJoins brute_min_joins(const Graft& g, const EngineOptions& opt = {},
                              ScanMode mode = ScanMode::serial);

// Minimum join-weight over all simple x-y paths for x != y, or over all
// circuits through x for x == y (kInfiniteDistance when no circuit exists).
// The weighting join is the lexicographically first brute minimum join.
int brute_dist(const Graft& g, VertexId x, VertexId y,
               const EngineOptions& opt = {});

// Minimum weight under a given edge set F over simple x-y paths; building
// block of the distance-invariance check. kInfiniteDistance when x and y
// are disconnected.
int min_path_weight(const Multigraph& g, const EdgeSet& f, VertexId x,
                    VertexId y, const EngineOptions& opt = {});
// Same over circuits through x.
int min_circuit_weight_through(const Multigraph& g, const EdgeSet& f,
                               VertexId x, const EngineOptions& opt = {});

// Union of all minimum joins.
EdgeSet brute_allowed(const Graft& g, const EngineOptions& opt = {});

// All perfect matchings, by direct backtracking over the lowest uncovered
// vertex (not via the join scan). Sorted lexicographically.
std::vector<EdgeSet> enumerate_one_factors(const Multigraph& g,
                                           const EngineOptions& opt = {});

namespace detail {
// Gray-code scan over all 2^|E| edge subsets collecting the join masks in
// scan order. The parallel variant splits the index range across OpenMP
// threads, re-seeding the incidence parity at each chunk start, and
// concatenates chunk results in range order, so both variants return the
// identical sequence.
std::vector<std::uint64_t> scan_join_masks(const Graft& g, ScanMode mode);
}  // namespace detail

}  // namespace oracle
}  // namespace graft
