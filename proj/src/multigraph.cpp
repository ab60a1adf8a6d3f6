#include "graft/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "graft/errors.hpp"

namespace graft {

Multigraph::Multigraph(int n, std::vector<std::pair<VertexId, VertexId>> edges,
                       std::vector<std::string> labels)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  if (labels_.empty()) {
    labels_.reserve(n);
    for (int i = 0; i < n; ++i) labels_.push_back("v" + std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != n)
    throw InputError("label count does not match vertex count");
  adjacency_.resize(n);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    auto [u, v] = edges_[e];
    check_vertex(u);
    check_vertex(v);
    adjacency_[u].push_back({v, e});
    if (u != v) adjacency_[v].push_back({u, e});
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

VertexId Multigraph::vertex_id(const std::string& label) const {
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (labels_[v] == label) return v;
  return -1;
}

void Multigraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count())
    throw InputError("invalid vertex id " + std::to_string(v));
}

void Multigraph::check_edge(EdgeId e) const {
  if (e < 0 || e >= edge_count())
    throw InputError("invalid edge id " + std::to_string(e));
}

std::vector<int> Multigraph::bfs_distances(VertexId s, EdgeId skip_edge) const {
  check_vertex(s);
  std::vector<int> dist(vertex_count(), -1);
  std::deque<VertexId> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (const Adj& a : adjacency_[u]) {
      if (a.edge == skip_edge || dist[a.to] >= 0) continue;
      dist[a.to] = dist[u] + 1;
      queue.push_back(a.to);
    }
  }
  return dist;
}

std::vector<int> Multigraph::component_ids(EdgeId skip_edge) const {
  std::vector<int> comp(vertex_count(), -1);
  int next = 0;
  for (VertexId s = 0; s < vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (const Adj& a : adjacency_[u]) {
        if (a.edge == skip_edge || comp[a.to] >= 0) continue;
        comp[a.to] = next;
        queue.push_back(a.to);
      }
    }
    ++next;
  }
  return comp;
}

std::vector<int> Multigraph::bipartition() const {
  std::vector<int> color(vertex_count(), -1);
  for (VertexId s = 0; s < vertex_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (const Adj& a : adjacency_[u]) {
        if (a.to == u) return {};  // loop
        if (color[a.to] < 0) {
          color[a.to] = 1 - color[u];
          queue.push_back(a.to);
        } else if (color[a.to] == color[u]) {
          return {};
        }
      }
    }
  }
  return color;
}

Multigraph build_multigraph(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& endpoint_pairs) {
  std::unordered_map<std::string, VertexId> index;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<VertexId>(i)).second)
      throw InputError("duplicate vertex label \"" + labels[i] + "\"");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(endpoint_pairs.size());
  for (const auto& [a, b] : endpoint_pairs) {
    auto ia = index.find(a);
    if (ia == index.end())
      throw InputError("unknown endpoint label \"" + a + "\"");
    auto ib = index.find(b);
    if (ib == index.end())
      throw InputError("unknown endpoint label \"" + b + "\"");
    edges.emplace_back(ia->second, ib->second);
  }
  return Multigraph(static_cast<int>(labels.size()), std::move(edges), labels);
}

}  // namespace graft
