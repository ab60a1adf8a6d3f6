#include "graft/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "graft/errors.hpp"
#include "graft/oracle.hpp"
#include "graft/tjoin.hpp"

namespace graft {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<FactorComponent> components_from_allowed(const Multigraph& g,
                                                     const EdgeSet& allowed) {
  Dsu dsu(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!allowed.contains(e)) continue;
    auto [u, v] = g.ends(e);
    dsu.merge(u, v);
  }
  // Root ids are component minima, so sorting roots orders components by
  // smallest contained vertex.
  std::vector<int> roots;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (dsu.find(v) == v) roots.push_back(v);
  std::sort(roots.begin(), roots.end());
  std::vector<int> index(g.vertex_count(), -1);
  for (size_t i = 0; i < roots.size(); ++i) index[roots[i]] = (int)i;

  std::vector<FactorComponent> out(roots.size());
  for (size_t i = 0; i < roots.size(); ++i) {
    out[i].id = (int)i;
    out[i].edges = EdgeSet(g.edge_count());
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out[index[dsu.find(v)]].vertices.push_back(v);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!allowed.contains(e)) continue;
    out[index[dsu.find(g.ends(e).first)]].edges.insert(e);
  }
  return out;
}

void require_comb(const Graft& g, const CombDesignation& d, int nu_value) {
  int n = g.graph.vertex_count();
  std::vector<char> role(n, -1);
  for (VertexId v : d.spine) {
    g.graph.check_vertex(v);
    role[v] = 0;
  }
  for (VertexId v : d.tooth) {
    g.graph.check_vertex(v);
    if (role[v] == 0) throw NotCombError("spine and tooth overlap");
    role[v] = 1;
  }
  for (VertexId v = 0; v < n; ++v)
    if (role[v] < 0) throw NotCombError("designation does not cover vertex " +
                                        g.graph.label(v));
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    auto [u, v] = g.graph.ends(e);
    if (role[u] == role[v])
      throw NotCombError("edge " + std::to_string(e) +
                         " does not cross the designation");
  }
  if (nu_value != static_cast<int>(d.tooth.size()))
    throw NotCombError("nu = " + std::to_string(nu_value) +
                       " differs from tooth count " +
                       std::to_string(d.tooth.size()));
  // Teeth must be terminals; together with nu = |tooth| this is equivalent
  // to every minimum join meeting each tooth's cut exactly once.
  for (VertexId v : d.tooth)
    if (!g.is_terminal(v))
      throw NotCombError("tooth " + g.graph.label(v) + " is not a terminal");
}

}  // namespace

std::vector<FactorComponent> factor_components(const Graft& g,
                                               const EngineOptions& opt) {
  return components_from_allowed(g.graph, tjoin::allowed_edges(g, opt));
}

InstanceAnalysis::InstanceAnalysis(Graft g, EngineOptions opt)
    : graft_(std::move(g)), opt_(opt) {}

int InstanceAnalysis::nu() const {
  if (!nu_) nu_ = tjoin::nu(graft_, opt_);
  return *nu_;
}

const EdgeSet& InstanceAnalysis::min_join() const {
  if (!min_join_) min_join_ = tjoin::min_join(graft_, opt_).join;
  return *min_join_;
}

const EdgeSet& InstanceAnalysis::allowed() const {
  if (!allowed_) allowed_ = tjoin::allowed_edges(graft_, opt_);
  return *allowed_;
}

const std::vector<FactorComponent>& InstanceAnalysis::components() const {
  if (!components_)
    components_ = components_from_allowed(graft_.graph, allowed());
  return *components_;
}

int InstanceAnalysis::component_of(VertexId v) const {
  if (!component_of_) {
    std::vector<int> map(graft_.graph.vertex_count(), -1);
    for (const auto& c : components())
      for (VertexId u : c.vertices) map[u] = c.id;
    component_of_ = std::move(map);
  }
  return (*component_of_)[v];
}

const std::vector<std::vector<int>>& InstanceAnalysis::dist_matrix() const {
  if (dist_) return *dist_;
  int n = graft_.graph.vertex_count();
  auto comp = graft_.graph.component_ids();
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = x + 1; y < n; ++y)
      if (comp[x] == comp[y]) pairs.emplace_back(x, y);
  // Residual terminal sets grow by at most two; check the cap up front so
  // the parallel fill cannot throw.
  for (auto [x, y] : pairs) {
    int size = static_cast<int>(graft_.terminals.size());
    if (!graft_.is_terminal(x)) size += 1; else size -= 1;
    if (!graft_.is_terminal(y)) size += 1; else size -= 1;
    if (size > opt_.max_terminals)
      throw CapExceededError("terminals", size, opt_.max_terminals);
  }
  nu();  // materialize before the parallel region

  std::vector<std::vector<int>> matrix(
      n, std::vector<int>(n, oracle::kInfiniteDistance));
  for (VertexId v = 0; v < n; ++v) matrix[v][v] = 0;
  int total = static_cast<int>(pairs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < total; ++i) {
    auto [x, y] = pairs[i];
    int value = tjoin::dist(graft_, x, y, opt_);
    matrix[x][y] = value;
    matrix[y][x] = value;
  }
  dist_ = std::move(matrix);
  return *dist_;
}

int InstanceAnalysis::dist(VertexId x, VertexId y) const {
  return dist_matrix()[x][y];
}

const KLPartition& InstanceAnalysis::kl() const {
  if (kl_) return *kl_;
  int n = graft_.graph.vertex_count();
  const auto& comps = components();
  Dsu dsu(n);
  for (const auto& c : comps) {
    for (size_t i = 0; i < c.vertices.size(); ++i)
      for (size_t j = i + 1; j < c.vertices.size(); ++j)
        if (dist(c.vertices[i], c.vertices[j]) == 0)
          dsu.merge(c.vertices[i], c.vertices[j]);
  }
  KLPartition part;
  part.class_of.assign(n, -1);
  std::vector<int> index(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    int root = dsu.find(v);
    if (index[root] < 0) {
      index[root] = static_cast<int>(part.classes.size());
      part.classes.emplace_back();
    }
    part.class_of[v] = index[root];
    part.classes[index[root]].push_back(v);
  }
  part.component_classes.assign(comps.size(), {});
  for (size_t k = 0; k < part.classes.size(); ++k)
    part.component_classes[component_of(part.classes[k].front())].push_back(
        static_cast<int>(k));
  kl_ = std::move(part);
  return *kl_;
}

const std::vector<CombDesignation>& InstanceAnalysis::designations() const {
  if (!designations_) designations_ = comb_designations(graft_, opt_);
  return *designations_;
}

KLPartition kl_partition(const Graft& g, const EngineOptions& opt) {
  return InstanceAnalysis(g, opt).kl();
}

std::vector<CombDesignation> comb_designations(const Graft& g,
                                               const EngineOptions& opt) {
  int n = g.graph.vertex_count();
  auto color = g.graph.bipartition();
  if (n > 0 && color.empty()) return {};
  std::vector<VertexId> side[2];
  for (VertexId v = 0; v < n; ++v) side[color[v]].push_back(v);
  int nu_value = tjoin::nu(g, opt);
  std::vector<CombDesignation> out;
  for (int tooth_color : {1, 0}) {
    if (nu_value != static_cast<int>(side[tooth_color].size())) continue;
    // A tooth outside T could carry join-degree 0 or 2, breaking the
    // one-edge-per-tooth law that the rest of the theory rides on.
    bool teeth_terminal = true;
    for (VertexId v : side[tooth_color])
      if (!g.is_terminal(v)) teeth_terminal = false;
    if (!teeth_terminal) continue;
    out.push_back(CombDesignation{side[1 - tooth_color], side[tooth_color]});
  }
  return out;
}

bool verify_comb_characterization(const Graft& g, const CombDesignation& d,
                                  const EngineOptions& opt) {
  auto mins = oracle::brute_min_joins(g, opt);
  for (const auto& f : mins.joins)
    for (VertexId v : d.tooth)
      if ((f & vertex_cut(g.graph, v)).count() != 1) return false;
  return true;
}

DMPoset dm_relation(const Graft& g, const CombDesignation& d,
                    const EngineOptions& opt) {
  return dm_relation(InstanceAnalysis(g, opt), d);
}

DMPoset dm_relation(const InstanceAnalysis& analysis,
                    const CombDesignation& d) {
  const Graft& g = analysis.graft();
  require_comb(g, d, analysis.nu());

  DMPoset p;
  p.components = analysis.components();
  int k = static_cast<int>(p.components.size());
  p.base.assign(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) p.base[i][i] = 1;
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    auto [u, v] = g.graph.ends(e);
    if (d.in_tooth(u)) std::swap(u, v);  // u spine, v tooth
    int cu = analysis.component_of(u), cv = analysis.component_of(v);
    if (cu != cv) p.base[cv][cu] = 1;  // tooth side's component sits below
  }
  p.closure = p.base;
  for (int via = 0; via < k; ++via)
    for (int i = 0; i < k; ++i)
      if (p.closure[i][via])
        for (int j = 0; j < k; ++j)
          if (p.closure[via][j]) p.closure[i][j] = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (p.closure[i][j] && p.closure[j][i])
        throw AntisymmetryViolationError(i, j);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j || !p.closure[i][j]) continue;
      bool covered = true;
      for (int via = 0; via < k && covered; ++via)
        if (via != i && via != j && p.closure[i][via] && p.closure[via][j])
          covered = false;
      if (covered) p.hasse.emplace_back(i, j);
    }
  }
  std::sort(p.hasse.begin(), p.hasse.end());
  return p;
}

std::vector<int> upper_bounds(const DMPoset& p, int c) {
  if (c < 0 || c >= static_cast<int>(p.components.size()))
    throw InputError("unknown component id " + std::to_string(c));
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(p.components.size()); ++j)
    if (j != c && p.closure[c][j]) out.push_back(j);
  return out;
}

std::vector<int> defining_sequence(const DMPoset& p, int c1, int c2) {
  int k = static_cast<int>(p.components.size());
  if (c1 < 0 || c1 >= k || c2 < 0 || c2 >= k)
    throw InputError("unknown component id");
  if (c1 == c2 || !p.closure[c1][c2]) throw NotRelatedError(c1, c2);
  // Levels toward c2 over the base digraph, then a greedy smallest-id walk.
  std::vector<int> level(k, -1);
  level[c2] = 0;
  std::vector<int> queue{c2};
  for (size_t head = 0; head < queue.size(); ++head) {
    int cur = queue[head];
    for (int i = 0; i < k; ++i)
      if (i != cur && p.base[i][cur] && level[i] < 0) {
        level[i] = level[cur] + 1;
        queue.push_back(i);
      }
  }
  std::vector<int> seq{c1};
  int cur = c1;
  while (cur != c2) {
    int next = -1;
    for (int j = 0; j < k && next < 0; ++j)
      if (j != cur && p.base[cur][j] && level[j] == level[cur] - 1) next = j;
    if (next < 0) throw std::logic_error("defining sequence walk got stuck");
    seq.push_back(next);
    cur = next;
  }
  return seq;
}

AttributeMap attributes(const Graft& g, const CombDesignation& d,
                        const DMPoset& p, int c0, const EngineOptions& opt) {
  return attributes(InstanceAnalysis(g, opt), d, p, c0);
}

AttributeMap attributes(const InstanceAnalysis& analysis,
                        const CombDesignation& d, const DMPoset& p, int c0) {
  const Graft& g = analysis.graft();
  const KLPartition& kl = analysis.kl();
  auto uppers = upper_bounds(p, c0);

  AttributeMap am;
  am.base_component = c0;
  for (int cls : kl.component_classes[c0])
    if (d.in_tooth(kl.classes[cls].front())) am.tooth_classes.push_back(cls);

  std::vector<int> position(p.components.size(), -1);
  for (size_t i = 0; i < uppers.size(); ++i) position[uppers[i]] = (int)i;

  std::vector<int> seed(uppers.size(), -1);
  Dsu blocks(static_cast<int>(uppers.size()));
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    auto [u, v] = g.graph.ends(e);
    int cu = analysis.component_of(u), cv = analysis.component_of(v);
    if (cu == cv) continue;
    if (position[cu] >= 0 && position[cv] >= 0)
      blocks.merge(position[cu], position[cv]);
    for (int flip = 0; flip < 2; ++flip) {
      if (cu == c0 && position[cv] >= 0) {
        // u is the base-component endpoint seen from upper component cv.
        if (!d.in_tooth(u))
          throw InconsistentLabelingError(
              "upper bound touches the spine of its base component");
        int cls = kl.class_of[u];
        int& s = seed[position[cv]];
        if (s >= 0 && s != cls)
          throw InconsistentLabelingError(
              "two neighbor classes seed one upper bound");
        s = cls;
      }
      std::swap(u, v);
      std::swap(cu, cv);
    }
  }

  std::vector<int> block_label(uppers.size(), -1);
  for (size_t i = 0; i < uppers.size(); ++i) {
    if (seed[i] < 0) continue;
    int root = blocks.find(static_cast<int>(i));
    if (block_label[root] >= 0 && block_label[root] != seed[i])
      throw InconsistentLabelingError(
          "two seeds of one propagation block disagree");
    block_label[root] = seed[i];
  }
  for (size_t i = 0; i < uppers.size(); ++i) {
    int label = block_label[blocks.find(static_cast<int>(i))];
    if (label < 0)
      throw InconsistentLabelingError("propagation block has no seed");
    am.attribute.emplace_back(uppers[i], label);
  }
  for (int cls : am.tooth_classes) {
    std::vector<int> bucket;
    for (auto [comp, label] : am.attribute)
      if (label == cls) bucket.push_back(comp);
    am.buckets.emplace_back(cls, std::move(bucket));
  }
  return am;
}

DMPoset classic_dm(const Multigraph& g, const EngineOptions& opt) {
  auto color = g.bipartition();
  if (g.vertex_count() > 0 && color.empty()) throw NotBipartiteError();
  if (g.vertex_count() % 2 != 0) throw NotFactorizableError();
  std::vector<VertexId> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  Graft graft{g, all};
  if (tjoin::nu(graft, opt) * 2 != g.vertex_count())
    throw NotFactorizableError();
  CombDesignation d;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    (color[v] == 0 ? d.spine : d.tooth).push_back(v);
  return dm_relation(graft, d, opt);
}

}  // namespace graft
