#include "graft/generators.hpp"

#include <numeric>
#include <random>

#include "graft/errors.hpp"

namespace graft {
namespace gen {

namespace {

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  // Hand-rolled draws; the standard distributions are not portable across
  // library implementations.
  int below(int k) { return static_cast<int>(engine() % std::uint64_t(k)); }
  bool chance(double p) { return (engine() >> 11) * 0x1.0p-53 < p; }
};

Graft labeled_graft(const std::vector<std::string>& labels,
                    const std::vector<std::pair<std::string, std::string>>& edges,
                    const std::vector<std::string>& terminals) {
  Multigraph g = build_multigraph(labels, edges);
  std::vector<VertexId> t;
  for (const auto& label : terminals) t.push_back(g.vertex_id(label));
  return validate_graft(g, t);
}

std::vector<VertexId> repair_parity(const Multigraph& g,
                                    std::vector<char> candidate) {
  auto comp = g.component_ids();
  int ncomp = 0;
  for (int c : comp) ncomp = std::max(ncomp, c + 1);
  std::vector<int> parity(ncomp, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (candidate[v]) parity[comp[v]] ^= 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (candidate[v] && parity[comp[v]]) {
      candidate[v] = 0;  // smallest id first: vertices scanned ascending
      parity[comp[v]] = 0;
    }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (candidate[v]) out.push_back(v);
  return out;
}

}  // namespace

std::map<std::string, Graft> named_instances() {
  std::map<std::string, Graft> out;
  out.emplace("k2", labeled_graft({"u", "v"}, {{"u", "v"}}, {"u", "v"}));
  out.emplace("p4", labeled_graft({"v1", "v2", "v3", "v4"},
                                  {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}},
                                  {"v1", "v2", "v3", "v4"}));
  out.emplace("c4", labeled_graft(
                        {"a1", "b1", "a2", "b2"},
                        {{"a1", "b1"}, {"b1", "a2"}, {"a2", "b2"}, {"b2", "a1"}},
                        {"a1", "b1", "a2", "b2"}));
  out.emplace(
      "c8",
      labeled_graft({"a1", "b1", "a2", "b2", "a3", "b3", "a4", "b4"},
                    {{"a1", "b1"},
                     {"b1", "a2"},
                     {"a2", "b2"},
                     {"b2", "a3"},
                     {"a3", "b3"},
                     {"b3", "a4"},
                     {"a4", "b4"},
                     {"b4", "a1"}},
                    {"a1", "b1", "a2", "b2", "a3", "b3", "a4", "b4"}));
  out.emplace("star-4",
              labeled_graft({"a0", "b1", "b2", "b3", "b4"},
                            {{"a0", "b1"}, {"a0", "b2"}, {"a0", "b3"},
                             {"a0", "b4"}},
                            {"b1", "b2", "b3", "b4"}));
  out.emplace("two-pendant",
              labeled_graft({"a0", "b1", "b2", "x1", "y1", "x2", "y2"},
                            {{"a0", "b1"},
                             {"a0", "b2"},
                             {"x1", "y1"},
                             {"x2", "y2"},
                             {"x1", "b1"},
                             {"x2", "b2"}},
                            {"b1", "b2", "x1", "y1", "x2", "y2"}));
  out.emplace(
      "chain",
      labeled_graft({"a0", "b1", "b2", "x1", "y1", "x2", "y2", "z1", "w1"},
                    {{"a0", "b1"},
                     {"a0", "b2"},
                     {"x1", "y1"},
                     {"x2", "y2"},
                     {"x1", "b1"},
                     {"x2", "b2"},
                     {"z1", "w1"},
                     {"z1", "y1"}},
                    {"b1", "b2", "x1", "y1", "x2", "y2", "z1", "w1"}));
  // A square with a balanced detour between its equivalent teeth; the one
  // named instance whose ear checks are non-vacuous.
  out.emplace("eared-c4",
              labeled_graft({"a1", "b1", "a2", "b2", "x", "y", "z", "w"},
                            {{"a1", "b1"},
                             {"b1", "a2"},
                             {"a2", "b2"},
                             {"b2", "a1"},
                             {"x", "y"},
                             {"z", "w"},
                             {"b1", "x"},
                             {"y", "z"},
                             {"z", "b2"}},
                            {"a1", "b1", "a2", "b2", "x", "y", "z", "w"}));
  return out;
}

Graft gen_random_graft(int n, int m, double t_prob, std::uint64_t seed) {
  if (n < 1) throw InputError("random graft needs n >= 1");
  if (m < 0) throw InputError("random graft needs m >= 0");
  Rng rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = rng.below(n);
    int v = rng.below(n);
    edges.emplace_back(u, v);
  }
  Multigraph g(n, std::move(edges));
  std::vector<char> candidate(n, 0);
  for (VertexId v = 0; v < n; ++v) candidate[v] = rng.chance(t_prob);
  return validate_graft(g, repair_parity(g, std::move(candidate)));
}

CombSample gen_comb_random(int nA, int nB, int m, std::uint64_t seed,
                           int max_tries, const EngineOptions& opt) {
  if (nA < 1 || nB < 1) throw InputError("comb sampler needs nA, nB >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    int n = nA + nB;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < m; ++i)
      edges.emplace_back(rng.below(nA), nA + rng.below(nB));
    Multigraph g(n, std::move(edges));
    std::vector<char> candidate(n, 0);
    for (VertexId v = 0; v < n; ++v) candidate[v] = rng.chance(0.5);
    Graft graft = validate_graft(g, repair_parity(g, std::move(candidate)));
    for (const auto& d : comb_designations(graft, opt))
      if (static_cast<int>(d.tooth.size()) == nB)
        return CombSample{std::move(graft), d};
  }
  throw ExhaustedError(max_tries);
}

Graft path_graft(int n) {
  if (n < 2 || n % 2 != 0) throw InputError("path family needs even n >= 2");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  Multigraph g(n, std::move(edges));
  std::vector<VertexId> t(n);
  std::iota(t.begin(), t.end(), 0);
  return validate_graft(g, std::move(t));
}

Graft cycle_graft(int n) {
  if (n < 2 || n % 2 != 0) throw InputError("cycle family needs even n >= 2");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  Multigraph g(n, std::move(edges));
  std::vector<VertexId> t(n);
  std::iota(t.begin(), t.end(), 0);
  return validate_graft(g, std::move(t));
}

Graft star_graft(int teeth) {
  if (teeth < 0 || teeth % 2 != 0)
    throw InputError("star family needs an even tooth count");
  std::vector<std::string> labels{"a0"};
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> terminals;
  for (int i = 1; i <= teeth; ++i) {
    labels.push_back("b" + std::to_string(i));
    edges.emplace_back("a0", labels.back());
    terminals.push_back(labels.back());
  }
  return labeled_graft(labels, edges, terminals);
}

}  // namespace gen
}  // namespace graft
