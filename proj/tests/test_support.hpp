#pragma once

#include <vector>

#include "graft/core.hpp"
#include "graft/generators.hpp"

namespace graft::test {

inline Graft make(int n, std::vector<std::pair<VertexId, VertexId>> edges,
                  std::vector<VertexId> terminals) {
  return validate_graft(Multigraph(n, std::move(edges)),
                        std::move(terminals));
}

inline Graft named(const std::string& name) {
  return gen::named_instances().at(name);
}

inline VertexId vid(const Graft& g, const std::string& label) {
  return g.graph.vertex_id(label);
}

inline Walk path_walk(std::vector<VertexId> vertices,
                      std::vector<EdgeId> edges) {
  Walk w;
  w.kind = Walk::Kind::path;
  w.vertices = std::move(vertices);
  w.edges = std::move(edges);
  return w;
}

inline Walk circuit_walk(std::vector<VertexId> vertices,
                         std::vector<EdgeId> edges) {
  Walk w;
  w.kind = Walk::Kind::circuit;
  w.vertices = std::move(vertices);
  w.edges = std::move(edges);
  return w;
}

}  // namespace graft::test
