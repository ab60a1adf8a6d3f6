#include "graft/core.hpp"

#include <algorithm>

#include "graft/errors.hpp"

namespace graft {

void validate_walk(const Multigraph& g, const Walk& w) {
  if (w.vertices.size() != w.edges.size() + 1)
    throw InputError("walk has mismatched vertex/edge counts");
  for (VertexId v : w.vertices) g.check_vertex(v);
  for (size_t i = 0; i < w.edges.size(); ++i) {
    g.check_edge(w.edges[i]);
    auto [a, b] = g.ends(w.edges[i]);
    VertexId u = w.vertices[i], v = w.vertices[i + 1];
    if (!((a == u && b == v) || (a == v && b == u)))
      throw InputError("walk edge " + std::to_string(w.edges[i]) +
                       " does not connect consecutive vertices");
  }
  if (w.kind == Walk::Kind::circuit) {
    if (w.edges.empty() || w.vertices.front() != w.vertices.back())
      throw InputError("circuit does not close up");
    std::vector<VertexId> interior(w.vertices.begin(), w.vertices.end() - 1);
    std::sort(interior.begin(), interior.end());
    if (std::adjacent_find(interior.begin(), interior.end()) != interior.end())
      throw InputError("circuit revisits a vertex");
  } else {
    std::vector<VertexId> vs = w.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      throw InputError("path revisits a vertex");
  }
}

static std::vector<char> membership(const Multigraph& g,
                                    const std::vector<VertexId>& x) {
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : x) {
    g.check_vertex(v);
    in[v] = 1;
  }
  return in;
}

EdgeSet cut(const Multigraph& g, const std::vector<VertexId>& x) {
  std::vector<char> in = membership(g, x);
  EdgeSet out(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.ends(e);
    if (in[u] != in[v]) out.insert(e);
  }
  return out;
}

EdgeSet vertex_cut(const Multigraph& g, VertexId v) {
  return cut(g, {v});
}

std::vector<VertexId> neighbors(const Multigraph& g,
                                const std::vector<VertexId>& x) {
  std::vector<char> in = membership(g, x);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> out;
  for (VertexId v : x)
    for (const auto& a : g.adjacent(v))
      if (!in[a.to] && !seen[a.to]) {
        seen[a.to] = 1;
        out.push_back(a.to);
      }
  std::sort(out.begin(), out.end());
  return out;
}

Graft validate_graft(const Multigraph& g, std::vector<VertexId> terminals) {
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()),
                  terminals.end());
  for (VertexId v : terminals) g.check_vertex(v);
  std::vector<int> comp = g.component_ids();
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> parity(ncomp, 0);
  for (VertexId v : terminals) parity[comp[v]] ^= 1;
  for (int c = 0; c < ncomp; ++c) {
    if (!parity[c]) continue;
    std::vector<VertexId> members;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (comp[v] == c) members.push_back(v);
    throw OddComponentError(std::move(members));
  }
  return Graft{g, std::move(terminals)};
}

int weight(const EdgeSet& f, const EdgeSet& s) {
  return s.count() - 2 * (s & f).count();
}

int weight(const EdgeSet& f, const Walk& w) {
  int total = 0;
  for (EdgeId e : w.edges) total += f.contains(e) ? -1 : 1;
  return total;
}

bool is_join(const Graft& g, const EdgeSet& f) {
  std::vector<int> degree(g.graph.vertex_count(), 0);
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    if (!f.contains(e)) continue;
    auto [u, v] = g.graph.ends(e);
    degree[u] += 1;
    degree[v] += 1;  // a loop contributes 2 at its vertex
  }
  for (VertexId v = 0; v < g.graph.vertex_count(); ++v)
    if ((degree[v] & 1) != (g.is_terminal(v) ? 1 : 0)) return false;
  return true;
}

bool is_ear(const Multigraph& g, const std::vector<VertexId>& x,
            const Walk& w) {
  validate_walk(g, w);
  std::vector<char> in = membership(g, x);
  if (w.kind == Walk::Kind::circuit) {
    int hits = 0;
    for (size_t i = 0; i + 1 < w.vertices.size(); ++i)
      hits += in[w.vertices[i]];
    return hits == 1;
  }
  if (!in[w.vertices.front()] || !in[w.vertices.back()]) return false;
  for (size_t i = 1; i + 1 < w.vertices.size(); ++i)
    if (in[w.vertices[i]]) return false;
  return true;
}

bool is_balanced(const Walk& w, const EdgeSet& f) {
  size_t n = w.vertices.size();
  if (n < 2) return true;
  // Walk-degree >= 2 means: interior vertices of a path, every vertex of a
  // circuit. In both cases the two incident walk-edges are consecutive.
  size_t first = (w.kind == Walk::Kind::circuit) ? 0 : 1;
  for (size_t i = first; i + 1 < n; ++i) {
    EdgeId before =
        (i == 0) ? w.edges.back() : w.edges[i - 1];  // circuit wrap
    EdgeId after = w.edges[i];
    if (f.contains(before) == f.contains(after)) return false;
  }
  return true;
}

}  // namespace graft
