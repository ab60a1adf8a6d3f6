#include "graft/oracle.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "graft/enumerate.hpp"
#include "graft/errors.hpp"

namespace graft {
namespace oracle {

namespace {

void check_scan_caps(const Graft& g, const EngineOptions& opt) {
  int m = g.graph.edge_count();
  int cap = std::min(opt.max_oracle_edges, 62);
  if (m > cap) throw CapExceededError("oracle edges", m, cap);
  if (g.graph.vertex_count() > 64)
    throw CapExceededError("oracle vertices", g.graph.vertex_count(), 64);
}

std::uint64_t terminal_mask(const Graft& g) {
  std::uint64_t t = 0;
  for (VertexId v : g.terminals) t |= std::uint64_t{1} << v;
  return t;
}

// Incidence parity contribution of each edge; loops cancel out.
std::vector<std::uint64_t> endpoint_masks(const Multigraph& g) {
  std::vector<std::uint64_t> em(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.ends(e);
    em[e] = (std::uint64_t{1} << u) ^ (std::uint64_t{1} << v);
  }
  return em;
}

std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

std::uint64_t parity_of_mask(const std::vector<std::uint64_t>& em,
                             std::uint64_t mask) {
  std::uint64_t parity = 0;
  while (mask) {
    int e = __builtin_ctzll(mask);
    parity ^= em[e];
    mask &= mask - 1;
  }
  return parity;
}

void scan_range(const std::vector<std::uint64_t>& em, std::uint64_t target,
                std::uint64_t lo, std::uint64_t hi,
                std::vector<std::uint64_t>& out) {
  std::uint64_t parity = parity_of_mask(em, gray(lo));
  for (std::uint64_t i = lo; i < hi; ++i) {
    if (i != lo) parity ^= em[__builtin_ctzll(i)];
    if (parity == target) out.push_back(gray(i));
  }
}

}  // namespace

namespace detail {

std::vector<std::uint64_t> scan_join_masks(const Graft& g, ScanMode mode) {
  const auto em = endpoint_masks(g.graph);
  const std::uint64_t target = terminal_mask(g);
  const std::uint64_t total = std::uint64_t{1} << g.graph.edge_count();

  if (mode == ScanMode::serial) {
    std::vector<std::uint64_t> out;
    scan_range(em, target, 0, total, out);
    return out;
  }

  int chunks = 4;  // several chunks even single-threaded: same code path
#ifdef _OPENMP
  chunks = std::max(chunks, omp_get_max_threads());
#endif
  if (total < 1024) chunks = 1;
  std::vector<std::vector<std::uint64_t>> parts(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1)
#endif
  for (int c = 0; c < chunks; ++c) {
    std::uint64_t lo = total / chunks * c;
    std::uint64_t hi = (c == chunks - 1) ? total : total / chunks * (c + 1);
    scan_range(em, target, lo, hi, parts[c]);
  }
  std::vector<std::uint64_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace detail

std::vector<EdgeSet> enumerate_joins(const Graft& g, const EngineOptions& opt,
                                     ScanMode mode) {
  check_scan_caps(g, opt);
  auto masks = detail::scan_join_masks(g, mode);
  std::vector<EdgeSet> out;
  out.reserve(masks.size());
  for (auto m : masks)
    out.push_back(EdgeSet::from_mask(g.graph.edge_count(), m));
  std::sort(out.begin(), out.end(),
            [](const EdgeSet& a, const EdgeSet& b) { return a.size_lex_less(b); });
  return out;
}

BruteMinJoins brute_min_joins(const Graft& g, const EngineOptions& opt,
                              ScanMode mode) {
  check_scan_caps(g, opt);
  auto masks = detail::scan_join_masks(g, mode);
  int best = g.graph.edge_count() + 1;
  for (auto m : masks) best = std::min(best, __builtin_popcountll(m));
  BruteMinJoins result;
  result.nu = best;
  for (auto m : masks)
    if (__builtin_popcountll(m) == best)
      result.joins.push_back(EdgeSet::from_mask(g.graph.edge_count(), m));
  std::sort(result.joins.begin(), result.joins.end(),
            [](const EdgeSet& a, const EdgeSet& b) { return a.lex_less(b); });
  return result;
}

int min_path_weight(const Multigraph& g, const EdgeSet& f, VertexId x,
                    VertexId y, const EngineOptions& opt) {
  g.check_vertex(y);
  int best = kInfiniteDistance;
  enumerate_paths_from(g, x, /*max_edges=*/-1, opt.max_enumerated,
                       [&](const Walk& w) {
                         if (w.vertices.back() == y)
                           best = std::min(best, weight(f, w));
                       });
  return best;
}

int min_circuit_weight_through(const Multigraph& g, const EdgeSet& f,
                               VertexId x, const EngineOptions& opt) {
  g.check_vertex(x);
  int best = kInfiniteDistance;
  enumerate_circuits(g, /*max_edges=*/-1, opt.max_enumerated,
                     [&](const Walk& w) {
                       if (std::find(w.vertices.begin(), w.vertices.end(), x) !=
                           w.vertices.end())
                         best = std::min(best, weight(f, w));
                     });
  return best;
}

int brute_dist(const Graft& g, VertexId x, VertexId y,
               const EngineOptions& opt) {
  auto mins = brute_min_joins(g, opt);
  const EdgeSet& f = mins.joins.front();
  if (x == y) return min_circuit_weight_through(g.graph, f, x, opt);
  int w = min_path_weight(g.graph, f, x, y, opt);
  if (w == kInfiniteDistance) throw DisconnectedError(x, y);
  return w;
}

EdgeSet brute_allowed(const Graft& g, const EngineOptions& opt) {
  auto mins = brute_min_joins(g, opt);
  EdgeSet all(g.graph.edge_count());
  for (const auto& j : mins.joins) all |= j;
  return all;
}

namespace {

void one_factor_dfs(const Multigraph& g, std::vector<char>& covered,
                    EdgeSet& current, std::vector<EdgeSet>& out) {
  VertexId lowest = -1;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!covered[v]) {
      lowest = v;
      break;
    }
  if (lowest < 0) {
    out.push_back(current);
    return;
  }
  for (const auto& a : g.adjacent(lowest)) {
    if (a.to == lowest || covered[a.to]) continue;
    covered[lowest] = covered[a.to] = 1;
    current.insert(a.edge);
    one_factor_dfs(g, covered, current, out);
    current.erase(a.edge);
    covered[lowest] = covered[a.to] = 0;
  }
}

}  // namespace

std::vector<EdgeSet> enumerate_one_factors(const Multigraph& g,
                                           const EngineOptions& opt) {
  if (g.edge_count() > opt.max_oracle_edges)
    throw CapExceededError("oracle edges", g.edge_count(),
                           opt.max_oracle_edges);
  std::vector<EdgeSet> out;
  if (g.vertex_count() % 2 != 0) return out;
  std::vector<char> covered(g.vertex_count(), 0);
  EdgeSet current(g.edge_count());
  one_factor_dfs(g, covered, current, out);
  std::sort(out.begin(), out.end(),
            [](const EdgeSet& a, const EdgeSet& b) { return a.lex_less(b); });
  return out;
}

}  // namespace oracle
}  // namespace graft
