#include "graft/tjoin.hpp"

#include <algorithm>
#include <optional>

#include "graft/errors.hpp"

namespace graft {
namespace tjoin {

namespace {

constexpr int kInf = 1 << 29;

std::vector<VertexId> symmetric_difference(const std::vector<VertexId>& t,
                                           VertexId x, VertexId y) {
  std::vector<VertexId> flip{x};
  if (y != x) flip.push_back(y);
  std::sort(flip.begin(), flip.end());
  std::vector<VertexId> out;
  std::set_symmetric_difference(t.begin(), t.end(), flip.begin(), flip.end(),
                                std::back_inserter(out));
  return out;
}

// Pairwise BFS distances among the terminals, skip_edge treated as deleted.
std::vector<std::vector<int>> terminal_distances(
    const Multigraph& g, const std::vector<VertexId>& terminals,
    EdgeId skip_edge) {
  int k = static_cast<int>(terminals.size());
  std::vector<std::vector<int>> d(k, std::vector<int>(k, kInf));
  for (int i = 0; i < k; ++i) {
    auto dist = g.bfs_distances(terminals[i], skip_edge);
    for (int j = 0; j < k; ++j)
      if (dist[terminals[j]] >= 0) d[i][j] = dist[terminals[j]];
  }
  return d;
}

// dp[mask] = cheapest pairing of the terminals in mask.
std::vector<int> matching_dp(const std::vector<std::vector<int>>& d) {
  int k = static_cast<int>(d.size());
  std::vector<int> dp(std::size_t{1} << k, kInf);
  dp[0] = 0;
  for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
    int i = __builtin_ctz(mask);
    if (!((mask >> i) & 1)) continue;
    std::uint32_t rest = mask & ~(1u << i);
    if (__builtin_popcount(mask) % 2 != 0) continue;
    int best = kInf;
    for (std::uint32_t r = rest; r; r &= r - 1) {
      int j = __builtin_ctz(r);
      if (d[i][j] >= kInf) continue;
      int sub = dp[rest & ~(1u << j)];
      if (sub < kInf) best = std::min(best, sub + d[i][j]);
    }
    dp[mask] = best;
  }
  return dp;
}

struct Engine {
  const Multigraph& g;
  std::vector<VertexId> terminals;
  EdgeId skip_edge;
  std::vector<std::vector<int>> d;
  std::vector<int> dp;

  Engine(const Multigraph& g, std::vector<VertexId> t, EdgeId skip,
         const EngineOptions& opt)
      : g(g), terminals(std::move(t)), skip_edge(skip) {
    if (static_cast<int>(terminals.size()) > opt.max_terminals)
      throw CapExceededError("terminals", terminals.size(),
                             opt.max_terminals);
    d = terminal_distances(g, terminals, skip_edge);
    dp = matching_dp(d);
  }

  // kInf when some terminal cannot be paired (odd residual parity).
  int value() const { return dp.back(); }

  // Matched pairs of the optimal pairing, smallest partner on ties.
  std::vector<std::pair<VertexId, VertexId>> pairs() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    std::uint32_t mask = (std::uint32_t{1} << terminals.size()) - 1;
    while (mask) {
      int i = __builtin_ctz(mask);
      std::uint32_t rest = mask & ~(1u << i);
      int pick = -1;
      for (std::uint32_t r = rest; r; r &= r - 1) {
        int j = __builtin_ctz(r);
        if (d[i][j] >= kInf) continue;
        int sub = dp[rest & ~(1u << j)];
        if (sub < kInf && sub + d[i][j] == dp[mask] && pick < 0) pick = j;
      }
      if (pick < 0) throw std::logic_error("matching reconstruction failed");
      out.emplace_back(terminals[i], terminals[pick]);
      mask = rest & ~(1u << pick);
    }
    return out;
  }

  // Lexicographically least shortest s-t path, as edge ids.
  std::vector<EdgeId> lex_shortest_path(VertexId s, VertexId t) const {
    auto dist = g.bfs_distances(t, skip_edge);
    std::vector<EdgeId> edges;
    VertexId u = s;
    while (u != t) {
      const Multigraph::Adj* step = nullptr;
      for (const auto& a : g.adjacent(u)) {
        if (a.edge == skip_edge || a.to == u) continue;
        if (dist[a.to] == dist[u] - 1) {
          step = &a;
          break;  // adjacency sorted by (vertex, edge)
        }
      }
      if (!step) throw std::logic_error("shortest path walk got stuck");
      edges.push_back(step->edge);
      u = step->to;
    }
    return edges;
  }
};

std::optional<int> nu_or_infeasible(const Multigraph& g,
                                    const std::vector<VertexId>& terminals,
                                    EdgeId skip_edge,
                                    const EngineOptions& opt) {
  Engine engine(g, terminals, skip_edge, opt);
  if (engine.value() >= kInf) return std::nullopt;
  return engine.value();
}

}  // namespace

int nu(const Graft& g, const EngineOptions& opt) {
  Engine engine(g.graph, g.terminals, -1, opt);
  if (engine.value() >= kInf)
    throw std::logic_error("graft invariant broken: no join exists");
  return engine.value();
}

MinJoinResult min_join(const Graft& g, const EngineOptions& opt) {
  Engine engine(g.graph, g.terminals, -1, opt);
  if (engine.value() >= kInf)
    throw std::logic_error("graft invariant broken: no join exists");
  EdgeSet join(g.graph.edge_count());
  for (auto [s, t] : engine.pairs())
    for (EdgeId e : engine.lex_shortest_path(s, t)) join.flip(e);
  if (!is_join(g, join) || join.count() != engine.value())
    throw std::logic_error("minimum join realization failed validation");
  return MinJoinResult{engine.value(), std::move(join)};
}

bool is_allowed(const Graft& g, EdgeId e, const EngineOptions& opt) {
  g.graph.check_edge(e);
  if (g.graph.is_loop(e)) return false;
  int base = nu(g, opt);
  auto [u, v] = g.graph.ends(e);
  auto residual = nu_or_infeasible(
      g.graph, symmetric_difference(g.terminals, u, v), e, opt);
  return residual && *residual == base - 1;
}

EdgeSet allowed_edges(const Graft& g, const EngineOptions& opt) {
  int m = g.graph.edge_count();
  int base = nu(g, opt);
  // Pre-check the residual terminal counts so the parallel loop cannot
  // throw.
  for (EdgeId e = 0; e < m; ++e) {
    auto [u, v] = g.graph.ends(e);
    int size = static_cast<int>(
        symmetric_difference(g.terminals, u, v).size());
    if (size > opt.max_terminals)
      throw CapExceededError("terminals", size, opt.max_terminals);
  }
  std::vector<char> allowed(m, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (EdgeId e = 0; e < m; ++e) {
    if (g.graph.is_loop(e)) continue;
    auto [u, v] = g.graph.ends(e);
    auto residual = nu_or_infeasible(
        g.graph, symmetric_difference(g.terminals, u, v), e, opt);
    allowed[e] = residual && *residual == base - 1;
  }
  EdgeSet out(m);
  for (EdgeId e = 0; e < m; ++e)
    if (allowed[e]) out.insert(e);
  return out;
}

int dist(const Graft& g, VertexId x, VertexId y, const EngineOptions& opt) {
  g.graph.check_vertex(x);
  g.graph.check_vertex(y);
  if (x == y) return 0;
  auto comp = g.graph.component_ids();
  if (comp[x] != comp[y]) throw DisconnectedError(x, y);
  Engine flipped(g.graph, symmetric_difference(g.terminals, x, y), -1, opt);
  if (flipped.value() >= kInf)
    throw std::logic_error("flipped graft infeasible despite connectivity");
  return flipped.value() - nu(g, opt);
}

PathWitness shortest_path_witness(const Graft& g, VertexId x, VertexId y,
                                  const EngineOptions& opt) {
  if (x == y) throw InputError("witness requires two distinct vertices");
  int expected = dist(g, x, y, opt);
  EdgeSet f = min_join(g, opt).join;
  Graft flipped{g.graph, symmetric_difference(g.terminals, x, y)};
  EdgeSet delta = f ^ min_join(flipped, opt).join;

  // Breadth-first x-y path inside the symmetric difference; any simple path
  // in it attains the distance because the leftover edges split into
  // circuits of nonnegative total weight summing to zero.
  int n = g.graph.vertex_count();
  std::vector<VertexId> parent(n, -1);
  std::vector<EdgeId> via(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<VertexId> queue{x};
  seen[x] = 1;
  for (size_t head = 0; head < queue.size() && !seen[y]; ++head) {
    VertexId u = queue[head];
    for (const auto& a : g.graph.adjacent(u)) {
      if (!delta.contains(a.edge) || seen[a.to]) continue;
      seen[a.to] = 1;
      parent[a.to] = u;
      via[a.to] = a.edge;
      queue.push_back(a.to);
    }
  }
  if (!seen[y])
    throw std::logic_error("join difference does not connect the endpoints");
  Walk walk;
  walk.kind = Walk::Kind::path;
  for (VertexId v = y; v != -1; v = parent[v]) {
    walk.vertices.push_back(v);
    if (via[v] >= 0) walk.edges.push_back(via[v]);
    if (v == x) break;
  }
  std::reverse(walk.vertices.begin(), walk.vertices.end());
  std::reverse(walk.edges.begin(), walk.edges.end());
  int w = weight(f, walk);
  if (w != expected)
    throw std::logic_error("witness weight disagrees with distance");
  return PathWitness{std::move(walk), w};
}

}  // namespace tjoin
}  // namespace graft
