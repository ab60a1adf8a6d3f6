#include "graft/enumerate.hpp"

#include <string>

#include "graft/errors.hpp"

namespace graft {

namespace {

struct Budget {
  long remaining;
  void spend() {
    if (--remaining < 0)
      throw CapExceededError("enumerated walks", 1, 0);
  }
};

struct PathDfs {
  const Multigraph& g;
  int max_edges;
  Budget budget;
  const WalkCallback& cb;
  Walk walk;
  std::vector<char> on_walk;

  void grow() {
    VertexId u = walk.vertices.back();
    if (max_edges >= 0 && static_cast<int>(walk.edges.size()) >= max_edges)
      return;
    for (const auto& a : g.adjacent(u)) {
      if (on_walk[a.to]) continue;  // loops included: a.to == u is on_walk
      budget.spend();
      walk.vertices.push_back(a.to);
      walk.edges.push_back(a.edge);
      on_walk[a.to] = 1;
      cb(walk);
      grow();
      on_walk[a.to] = 0;
      walk.edges.pop_back();
      walk.vertices.pop_back();
    }
  }
};

}  // namespace

void enumerate_paths_from(const Multigraph& g, VertexId start, int max_edges,
                          long budget, const WalkCallback& cb) {
  g.check_vertex(start);
  PathDfs dfs{g, max_edges, Budget{budget}, cb, Walk{}, {}};
  dfs.walk.kind = Walk::Kind::path;
  dfs.walk.vertices.push_back(start);
  dfs.on_walk.assign(g.vertex_count(), 0);
  dfs.on_walk[start] = 1;
  dfs.grow();
}

void enumerate_paths_avoiding(const Multigraph& g, VertexId start,
                              const std::vector<char>& forbidden,
                              int max_edges, long budget,
                              const WalkCallback& cb) {
  g.check_vertex(start);
  PathDfs dfs{g, max_edges, Budget{budget}, cb, Walk{}, {}};
  dfs.walk.kind = Walk::Kind::path;
  dfs.walk.vertices.push_back(start);
  dfs.on_walk.assign(forbidden.begin(), forbidden.end());
  dfs.on_walk[start] = 1;
  dfs.grow();
}

namespace {

struct CircuitDfs {
  const Multigraph& g;
  int max_edges;
  Budget budget;
  const WalkCallback& cb;
  VertexId root;
  Walk walk;
  std::vector<char> on_walk;

  void grow() {
    VertexId u = walk.vertices.back();
    int len = static_cast<int>(walk.edges.size());
    for (const auto& a : g.adjacent(u)) {
      if (a.to == root) {
        // Closing edge; dedupe the two orientations via edge-id order.
        if (len >= 1 && a.edge > walk.edges.front() &&
            (max_edges < 0 || len + 1 <= max_edges)) {
          budget.spend();
          walk.vertices.push_back(root);
          walk.edges.push_back(a.edge);
          cb(walk);
          walk.edges.pop_back();
          walk.vertices.pop_back();
        }
        continue;
      }
      if (a.to < root || on_walk[a.to]) continue;
      if (max_edges >= 0 && len + 1 >= max_edges) continue;
      budget.spend();
      walk.vertices.push_back(a.to);
      walk.edges.push_back(a.edge);
      on_walk[a.to] = 1;
      grow();
      on_walk[a.to] = 0;
      walk.edges.pop_back();
      walk.vertices.pop_back();
    }
  }
};

}  // namespace

void enumerate_circuits(const Multigraph& g, int max_edges, long budget,
                        const WalkCallback& cb) {
  Budget shared{budget};
  Walk loop;
  loop.kind = Walk::Kind::circuit;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const auto& a : g.adjacent(v)) {
      if (a.to != v) continue;
      shared.spend();
      loop.vertices = {v, v};
      loop.edges = {a.edge};
      cb(loop);
    }
  }
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    CircuitDfs dfs{g, max_edges, shared, cb, root, Walk{}, {}};
    dfs.walk.kind = Walk::Kind::circuit;
    dfs.walk.vertices.push_back(root);
    dfs.on_walk.assign(g.vertex_count(), 0);
    dfs.on_walk[root] = 1;
    dfs.grow();
    shared = dfs.budget;
  }
}

namespace {

struct EarDfs {
  const Multigraph& g;
  const std::vector<char>& anchor;
  int max_edges;
  Budget budget;
  const WalkCallback& cb;
  Walk walk;
  std::vector<char> on_walk;

  void grow() {
    VertexId u = walk.vertices.back();
    int len = static_cast<int>(walk.edges.size());
    if (max_edges >= 0 && len >= max_edges) return;
    for (const auto& a : g.adjacent(u)) {
      if (on_walk[a.to]) continue;
      if (anchor[a.to]) {
        // Closing step back into the anchor; needs interior to exist and
        // ends ordered to report each ear once.
        if (len >= 1 && a.to > walk.vertices.front()) {
          budget.spend();
          walk.vertices.push_back(a.to);
          walk.edges.push_back(a.edge);
          cb(walk);
          walk.edges.pop_back();
          walk.vertices.pop_back();
        }
        continue;
      }
      budget.spend();
      walk.vertices.push_back(a.to);
      walk.edges.push_back(a.edge);
      on_walk[a.to] = 1;
      grow();
      on_walk[a.to] = 0;
      walk.edges.pop_back();
      walk.vertices.pop_back();
    }
  }
};

}  // namespace

void enumerate_ears(const Multigraph& g, const std::vector<char>& anchor,
                    int max_edges, long budget, const WalkCallback& cb) {
  Budget shared{budget};
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (!anchor[s]) continue;
    EarDfs dfs{g, anchor, max_edges, shared, cb, Walk{}, {}};
    dfs.walk.kind = Walk::Kind::path;
    dfs.walk.vertices.push_back(s);
    dfs.on_walk.assign(g.vertex_count(), 0);
    dfs.on_walk[s] = 1;
    dfs.grow();
    shared = dfs.budget;
  }
}

std::string fingerprint(const Graft& g) {
  std::string out = "n=" + std::to_string(g.graph.vertex_count()) + ";e=";
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    auto [u, v] = g.graph.ends(e);
    if (e) out += ",";
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  out += ";t=";
  for (size_t i = 0; i < g.terminals.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(g.terminals[i]);
  }
  return out;
}

}  // namespace graft
