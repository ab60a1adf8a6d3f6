#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graft/edge_set.hpp"

namespace graft {

// Labeled multigraph. Vertices carry opaque labels and dense ids 0..n-1;
// edges are unordered endpoint pairs whose position in the list is the edge
// id. Loops and parallel edges are representable and preserved; no operation
// ever renumbers edges. Immutable after construction.
class Multigraph {
public:
  struct Adj {
    VertexId to;
    EdgeId edge;
    bool operator<(const Adj& o) const {
      return to != o.to ? to < o.to : edge < o.edge;
    }
  };

  Multigraph() = default;
  // Id-based construction; labels default to "v<i>".
  Multigraph(int n, std::vector<std::pair<VertexId, VertexId>> edges,
             std::vector<std::string> labels = {});

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  // -1 when the label is unknown.
  VertexId vertex_id(const std::string& label) const;

  std::pair<VertexId, VertexId> ends(EdgeId e) const { return edges_[e]; }
  bool is_loop(EdgeId e) const {
    return edges_[e].first == edges_[e].second;
  }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const {
    return edges_;
  }
  // Incidences sorted by (neighbor, edge id); a loop appears once.
  const std::vector<Adj>& adjacent(VertexId v) const { return adjacency_[v]; }

  void check_vertex(VertexId v) const;
  void check_edge(EdgeId e) const;

  // Unit-weight breadth-first distances from s, -1 where unreachable.
  // skip_edge, when >= 0, is treated as deleted.
  std::vector<int> bfs_distances(VertexId s, EdgeId skip_edge = -1) const;

  // Component id per vertex, numbered 0.. in order of smallest contained
  // vertex id. skip_edge as above.
  std::vector<int> component_ids(EdgeId skip_edge = -1) const;

  // Proper 2-coloring with the smallest vertex of every component in color
  // 0, or empty if none exists (odd cycle or loop).
  std::vector<int> bipartition() const;

private:
  std::vector<std::string> labels_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<Adj>> adjacency_;
};

// labels must be distinct and every endpoint label known; edge id equals the
// input position of its endpoint pair.
Multigraph build_multigraph(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& endpoint_pairs);

}  // namespace graft
