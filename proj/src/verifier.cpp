#include "graft/verifier.hpp"

#include <algorithm>
#include <functional>

#include "graft/enumerate.hpp"
#include "graft/errors.hpp"
#include "graft/tjoin.hpp"

namespace graft {
namespace verify {

namespace {

using oracle::kInfiniteDistance;

// Internal early-out carrying the counterexample text.
struct CheckFailure {
  std::string detail;
};

std::string walk_text(const Multigraph& g, const Walk& w) {
  std::string out;
  for (size_t i = 0; i < w.vertices.size(); ++i) {
    if (i) out += "-";
    out += g.label(w.vertices[i]);
  }
  out += " (edges";
  for (EdgeId e : w.edges) out += " " + std::to_string(e);
  out += ")";
  return out;
}

std::vector<char> tooth_mask(const Graft& g, const CombDesignation& d) {
  std::vector<char> mask(g.graph.vertex_count(), 0);
  for (VertexId v : d.tooth) mask[v] = 1;
  return mask;
}

// Balance relative to a designation: every interior tooth vertex has
// exactly one incident walk-edge in the join; interior spine vertices are
// unconstrained. The all-vertex form (is_balanced) would forbid tooth-tooth
// walks with both end edges in the join outright: strict alternation makes
// them odd, bipartiteness even.
bool comb_balanced(const Walk& w, const EdgeSet& f,
                   const std::vector<char>& tooth) {
  size_t n = w.vertices.size();
  if (n < 2) return true;
  size_t first = (w.kind == Walk::Kind::circuit) ? 0 : 1;
  for (size_t i = first; i + 1 < n; ++i) {
    if (!tooth[w.vertices[i]]) continue;
    EdgeId before = (i == 0) ? w.edges.back() : w.edges[i - 1];
    EdgeId after = w.edges[i];
    if (f.contains(before) == f.contains(after)) return false;
  }
  return true;
}

CheckResult run_check(const std::string& name, const InstanceAnalysis& a,
                      const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  r.instance = fingerprint(a.graft());
  try {
    body(r);
  } catch (const CheckFailure& f) {
    r.status = CheckResult::Status::failed;
    r.detail = f.detail;
  } catch (const CapExceededError& e) {
    r.status = CheckResult::Status::cap_exceeded;
    r.detail = e.what();
  }
  return r;
}

}  // namespace

CheckResult check_circuit_lemma(const InstanceAnalysis& a) {
  return run_check("circuit_lemma", a, [&](CheckResult& r) {
    const Graft& g = a.graft();
    const EdgeSet& f = a.min_join();
    enumerate_circuits(
        g.graph, a.options().max_path_edges, a.options().max_enumerated,
        [&](const Walk& w) {
          if (weight(f, w) != 0) return;
          ++r.witnesses;
          EdgeSet flipped = f;
          for (EdgeId e : w.edges) flipped.flip(e);
          if (!is_join(g, flipped) || flipped.count() != a.nu())
            throw CheckFailure{"flip along zero circuit " +
                               walk_text(g.graph, w) +
                               " is not a minimum join"};
          for (EdgeId e : w.edges)
            if (!a.allowed().contains(e))
              throw CheckFailure{"zero circuit " + walk_text(g.graph, w) +
                                 " contains non-allowed edge " +
                                 std::to_string(e)};
        });
  });
}

CheckResult check_distance_invariance(const InstanceAnalysis& a) {
  return run_check("distance_invariance", a, [&](CheckResult& r) {
    const Graft& g = a.graft();
    auto mins = oracle::brute_min_joins(g, a.options());
    size_t joins = mins.joins.size();
    if (joins < 2) return;  // unique join; nothing to compare
    int n = g.graph.vertex_count();
    auto comp = g.graph.component_ids();

    for (VertexId x = 0; x < n; ++x) {
      std::vector<std::vector<int>> best(
          n, std::vector<int>(joins, kInfiniteDistance));
      enumerate_paths_from(g.graph, x, -1, a.options().max_enumerated,
                           [&](const Walk& w) {
                             VertexId y = w.vertices.back();
                             if (y <= x) return;
                             for (size_t j = 0; j < joins; ++j)
                               best[y][j] = std::min(
                                   best[y][j], weight(mins.joins[j], w));
                           });
      for (VertexId y = x + 1; y < n; ++y) {
        if (comp[x] != comp[y]) continue;
        ++r.witnesses;
        for (size_t j = 1; j < joins; ++j)
          if (best[y][j] != best[y][0])
            throw CheckFailure{
                "path minima between " + g.graph.label(x) + " and " +
                g.graph.label(y) + " differ across minimum joins: " +
                std::to_string(best[y][0]) + " vs " +
                std::to_string(best[y][j])};
      }
    }

    // Circuit minima per vertex must be join-invariant as well.
    std::vector<std::vector<int>> cbest(
        n, std::vector<int>(joins, kInfiniteDistance));
    enumerate_circuits(g.graph, -1, a.options().max_enumerated,
                       [&](const Walk& w) {
                         for (size_t j = 0; j < joins; ++j) {
                           int wt = weight(mins.joins[j], w);
                           for (size_t i = 0; i + 1 < w.vertices.size(); ++i)
                             cbest[w.vertices[i]][j] =
                                 std::min(cbest[w.vertices[i]][j], wt);
                         }
                       });
    for (VertexId v = 0; v < n; ++v) {
      if (cbest[v][0] == kInfiniteDistance) continue;
      ++r.witnesses;
      for (size_t j = 1; j < joins; ++j)
        if (cbest[v][j] != cbest[v][0])
          throw CheckFailure{"circuit minima through " + g.graph.label(v) +
                             " differ across minimum joins"};
    }
  });
}

CheckResult check_nonpositive_distance(const InstanceAnalysis& a) {
  return run_check("nonpositive_distance", a, [&](CheckResult& r) {
    for (const auto& c : a.components()) {
      for (size_t i = 0; i < c.vertices.size(); ++i)
        for (size_t j = i + 1; j < c.vertices.size(); ++j) {
          ++r.witnesses;
          int d = a.dist(c.vertices[i], c.vertices[j]);
          if (d > 0)
            throw CheckFailure{
                "positive distance " + std::to_string(d) + " between " +
                a.graft().graph.label(c.vertices[i]) + " and " +
                a.graft().graph.label(c.vertices[j]) +
                " inside one factor-component"};
        }
    }
  });
}

CheckResult check_kl_equivalence(const InstanceAnalysis& a) {
  return run_check("kl_equivalence", a, [&](CheckResult& r) {
    for (const auto& c : a.components()) {
      const auto& vs = c.vertices;
      for (VertexId x : vs)
        for (VertexId y : vs) {
          if (y == x || a.dist(x, y) != 0) continue;
          for (VertexId z : vs) {
            if (z == x || z == y || a.dist(y, z) != 0) continue;
            ++r.witnesses;
            if (a.dist(x, z) != 0)
              throw CheckFailure{
                  "transitivity broken: " + a.graft().graph.label(x) + "~" +
                  a.graft().graph.label(y) + "~" + a.graft().graph.label(z) +
                  " but dist(x,z) = " + std::to_string(a.dist(x, z))};
          }
        }
    }
  });
}

CheckResult check_balanced_weights(const InstanceAnalysis& a,
                                   const CombDesignation& d) {
  return run_check("balanced_weights", a, [&](CheckResult& r) {
    const Graft& g = a.graft();
    const EdgeSet& f = a.min_join();
    auto tooth = tooth_mask(g, d);
    int n = g.graph.vertex_count();
    for (VertexId x = 0; x < n; ++x) {
      enumerate_paths_from(
          g.graph, x, a.options().max_path_edges, a.options().max_enumerated,
          [&](const Walk& w) {
            VertexId y = w.vertices.back();
            if (y < x || !comb_balanced(w, f, tooth)) return;
            ++r.witnesses;
            bool ex = f.contains(w.edges.front());
            bool ey = f.contains(w.edges.back());
            int expected;
            if (!tooth[x] && !tooth[y]) {
              expected = 0;
            } else if (tooth[x] && tooth[y]) {
              expected = (ex && ey) ? -2 : (ex != ey ? 0 : 2);
            } else {
              bool tooth_end_edge = tooth[x] ? ex : ey;
              expected = tooth_end_edge ? -1 : 1;
            }
            if (weight(f, w) != expected)
              throw CheckFailure{"balanced path " + walk_text(g.graph, w) +
                                 " weighs " + std::to_string(weight(f, w)) +
                                 ", table says " + std::to_string(expected)};
          });
    }
  });
}

CheckResult check_incomppath(const InstanceAnalysis& a,
                             const CombDesignation& d) {
  return run_check("incomppath", a, [&](CheckResult& r) {
    const Graft& g = a.graft();
    auto tooth = tooth_mask(g, d);
    for (const auto& c : a.components()) {
      const auto& vs = c.vertices;
      for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
          ++r.witnesses;
          int dist = a.dist(vs[i], vs[j]);
          int roles = tooth[vs[i]] + tooth[vs[j]];
          bool ok = (roles == 0 && dist == 0) ||
                    (roles == 1 && dist == -1) ||
                    (roles == 2 && (dist == 0 || dist == -2));
          if (!ok)
            throw CheckFailure{
                "component distance table broken at " +
                g.graph.label(vs[i]) + "," + g.graph.label(vs[j]) +
                ": dist " + std::to_string(dist) + " with " +
                std::to_string(roles) + " tooth ends"};
        }
    }
  });
}

CheckResult check_dm_antisymmetry(const InstanceAnalysis& a,
                                  const CombDesignation& d) {
  return run_check("dm_antisymmetry", a, [&](CheckResult& r) {
    DMPoset p;
    try {
      p = dm_relation(a, d);
    } catch (const AntisymmetryViolationError& e) {
      throw CheckFailure{e.what()};
    }
    int k = static_cast<int>(p.components.size());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j && p.closure[i][j]) {
          ++r.witnesses;
          if (p.closure[j][i])
            throw CheckFailure{"2-cycle between components " +
                               std::to_string(i) + " and " +
                               std::to_string(j)};
        }
  });
}

CheckResult check_ear_lemmas(const InstanceAnalysis& a,
                             const CombDesignation& d) {
  return run_check("ear_lemmas", a, [&](CheckResult& r) {
    const Graft& g = a.graft();
    const EdgeSet& f = a.min_join();
    auto tooth = tooth_mask(g, d);
    const KLPartition& kl = a.kl();
    int n = g.graph.vertex_count();

    for (const auto& c : a.components()) {
      if (static_cast<int>(c.vertices.size()) == n) continue;
      std::vector<char> anchor(n, 0);
      for (VertexId v : c.vertices) anchor[v] = 1;

      enumerate_ears(
          g.graph, anchor, a.options().max_path_edges,
          a.options().max_enumerated, [&](const Walk& w) {
            if (!comb_balanced(w, f, tooth)) return;
            ++r.witnesses;
            VertexId s = w.vertices.front(), t = w.vertices.back();
            if (!tooth[s] || !tooth[t])
              throw CheckFailure{"balanced ear " + walk_text(g.graph, w) +
                                 " ends outside the tooth set"};
            if (weight(f, w) != 2)
              throw CheckFailure{"balanced ear " + walk_text(g.graph, w) +
                                 " weighs " + std::to_string(weight(f, w))};
            if (kl.class_of[s] != kl.class_of[t])
              throw CheckFailure{"balanced ear " + walk_text(g.graph, w) +
                                 " joins inequivalent teeth"};
          });

      // Returns anchored at the far end of a -2 path avoid its exterior.
      std::vector<VertexId> teeth;
      for (VertexId v : c.vertices)
        if (tooth[v]) teeth.push_back(v);
      for (VertexId t : teeth) {
        std::vector<std::vector<char>> q_masks;
        std::vector<Walk> q_walks;
        enumerate_paths_avoiding(
            g.graph, t, anchor, a.options().max_path_edges,
            a.options().max_enumerated, [&](const Walk& w) {
              if (!comb_balanced(w, f, tooth)) return;
              std::vector<char> mask(n, 0);
              for (VertexId v : w.vertices) mask[v] = 1;
              q_masks.push_back(std::move(mask));
              q_walks.push_back(w);
            });
        if (q_masks.empty()) continue;
        for (VertexId s : teeth) {
          if (s == t || kl.class_of[s] == kl.class_of[t]) continue;
          enumerate_paths_from(
              g.graph, s, a.options().max_path_edges,
              a.options().max_enumerated, [&](const Walk& w) {
                if (w.vertices.back() != t || weight(f, w) != -2) return;
                for (size_t q = 0; q < q_masks.size(); ++q) {
                  ++r.witnesses;
                  for (VertexId v : w.vertices) {
                    if (anchor[v] || !q_masks[q][v]) continue;
                    throw CheckFailure{
                        "balanced return " + walk_text(g.graph, q_walks[q]) +
                        " meets the exterior of -2 path " +
                        walk_text(g.graph, w) + " at " + g.graph.label(v)};
                  }
                }
              });
        }
      }
    }
  });
}

CheckResult check_relativepath(const InstanceAnalysis& a,
                               const CombDesignation& d) {
  return run_check("relativepath", a, [&](CheckResult& r) {
    const Graft& g = a.graft();
    const EdgeSet& f = a.min_join();
    auto tooth = tooth_mask(g, d);
    int n = g.graph.vertex_count();

    for (const auto& c : a.components()) {
      std::vector<char> in_c(n, 0);
      for (VertexId v : c.vertices) in_c[v] = 1;
      EdgeSet induced(g.graph.edge_count());
      for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
        auto [u, v] = g.graph.ends(e);
        if (in_c[u] && in_c[v]) induced.insert(e);
      }
      std::vector<VertexId> teeth;
      for (VertexId v : c.vertices)
        if (tooth[v]) teeth.push_back(v);

      for (VertexId s : teeth) {
        enumerate_paths_from(
            g.graph, s, a.options().max_path_edges,
            a.options().max_enumerated, [&](const Walk& w) {
              VertexId y = w.vertices.back();
              if (y <= s || !in_c[y] || !tooth[y] || weight(f, w) != -2)
                return;
              ++r.witnesses;
              // Maximal stretches of edges on one side of the induced set.
              size_t i = 0;
              while (i < w.edges.size()) {
                bool inside = induced.contains(w.edges[i]);
                size_t j = i;
                while (j < w.edges.size() &&
                       induced.contains(w.edges[j]) == inside)
                  ++j;
                Walk part;
                part.kind = Walk::Kind::path;
                part.vertices.assign(w.vertices.begin() + i,
                                     w.vertices.begin() + j + 1);
                part.edges.assign(w.edges.begin() + i, w.edges.begin() + j);
                if (inside) {
                  if (weight(f, part) != -2)
                    throw CheckFailure{
                        "inside stretch " + walk_text(g.graph, part) +
                        " of " + walk_text(g.graph, w) + " weighs " +
                        std::to_string(weight(f, part))};
                } else {
                  if (!is_ear(g.graph, c.vertices, part))
                    throw CheckFailure{
                        "outside stretch " + walk_text(g.graph, part) +
                        " of " + walk_text(g.graph, w) + " is not an ear"};
                  if (weight(f, part) != 2)
                    throw CheckFailure{
                        "outside ear " + walk_text(g.graph, part) + " of " +
                        walk_text(g.graph, w) + " weighs " +
                        std::to_string(weight(f, part))};
                }
                i = j;
              }
            });
      }
    }
  });
}

CheckResult check_attribute_partition(const InstanceAnalysis& a,
                                      const CombDesignation& d) {
  return run_check("attribute_partition", a, [&](CheckResult& r) {
    const Graft& g = a.graft();
    const KLPartition& kl = a.kl();
    DMPoset p;
    try {
      p = dm_relation(a, d);
    } catch (const AntisymmetryViolationError& e) {
      throw CheckFailure{e.what()};
    }
    int k = static_cast<int>(p.components.size());

    for (int c0 = 0; c0 < k; ++c0) {
      auto uppers = upper_bounds(p, c0);
      if (uppers.empty()) continue;
      AttributeMap am;
      try {
        am = attributes(a, d, p, c0);
      } catch (const InconsistentLabelingError& e) {
        throw CheckFailure{std::string(e.what()) + " (base component " +
                           std::to_string(c0) + ")"};
      }
      std::vector<int> label(k, -1);
      for (auto [comp, cls] : am.attribute) label[comp] = cls;

      // Direct-neighbor seeds: one class per upper bound, matching its
      // assigned label.
      std::vector<int> seed(k, -1);
      for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
        auto [u, v] = g.graph.ends(e);
        for (int flip = 0; flip < 2; ++flip) {
          if (a.component_of(u) == c0 && label[a.component_of(v)] >= 0) {
            int cls = kl.class_of[u];
            int& s = seed[a.component_of(v)];
            if (s >= 0 && s != cls)
              throw CheckFailure{
                  "upper bound " + std::to_string(a.component_of(v)) +
                  " touches two classes of component " + std::to_string(c0)};
            s = cls;
          }
          std::swap(u, v);
        }
      }
      for (int up : uppers) {
        ++r.witnesses;
        if (seed[up] >= 0 && label[up] != seed[up])
          throw CheckFailure{"label of upper bound " + std::to_string(up) +
                             " ignores its neighbor class"};
      }
      // Adjacency propagation.
      for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
        auto [u, v] = g.graph.ends(e);
        int cu = a.component_of(u), cv = a.component_of(v);
        if (cu == cv || label[cu] < 0 || label[cv] < 0) continue;
        if (label[cu] != label[cv])
          throw CheckFailure{"adjacent upper bounds " + std::to_string(cu) +
                             "," + std::to_string(cv) +
                             " carry different labels"};
      }
      // Uniqueness by exhaustive relabeling at desk scale.
      long combos = 1;
      bool tractable = true;
      for (size_t i = 0; i < uppers.size() && tractable; ++i) {
        combos *= static_cast<long>(am.tooth_classes.size());
        if (combos > 4096) tractable = false;
      }
      if (tractable && !am.tooth_classes.empty()) {
        int matches = 0;
        bool computed_seen = false;
        std::vector<int> assign(uppers.size(), 0);
        for (long code = 0; code < combos; ++code) {
          long rest = code;
          for (size_t i = 0; i < uppers.size(); ++i) {
            assign[i] = am.tooth_classes[rest % am.tooth_classes.size()];
            rest /= am.tooth_classes.size();
          }
          bool ok = true;
          for (size_t i = 0; i < uppers.size() && ok; ++i)
            if (seed[uppers[i]] >= 0 && assign[i] != seed[uppers[i]])
              ok = false;
          for (EdgeId e = 0; e < g.graph.edge_count() && ok; ++e) {
            auto [u, v] = g.graph.ends(e);
            int cu = a.component_of(u), cv = a.component_of(v);
            if (cu == cv) continue;
            auto iu = std::find(uppers.begin(), uppers.end(), cu);
            auto iv = std::find(uppers.begin(), uppers.end(), cv);
            if (iu == uppers.end() || iv == uppers.end()) continue;
            if (assign[iu - uppers.begin()] != assign[iv - uppers.begin()])
              ok = false;
          }
          if (!ok) continue;
          ++matches;
          bool same = true;
          for (size_t i = 0; i < uppers.size(); ++i)
            if (assign[i] != label[uppers[i]]) same = false;
          computed_seen = computed_seen || same;
        }
        if (matches != 1 || !computed_seen)
          throw CheckFailure{"labeling of component " + std::to_string(c0) +
                             " is not the unique admissible one (" +
                             std::to_string(matches) + " candidates)"};
      }
      // Distinct-label direct uppers never share an upper bound.
      for (size_t i = 0; i < uppers.size(); ++i)
        for (size_t j = i + 1; j < uppers.size(); ++j) {
          int c1 = uppers[i], c2 = uppers[j];
          if (!p.base[c0][c1] || !p.base[c0][c2]) continue;
          if (seed[c1] < 0 || seed[c2] < 0 || seed[c1] == seed[c2]) continue;
          ++r.witnesses;
          for (int c = 0; c < k; ++c)
            if (p.closure[c1][c] && p.closure[c2][c])
              throw CheckFailure{
                  "distinct-label components " + std::to_string(c1) + "," +
                  std::to_string(c2) + " share upper bound " +
                  std::to_string(c)};
        }
    }
  });
}

CheckResult check_circuit_lemma(const Graft& g, const EngineOptions& opt) {
  return check_circuit_lemma(InstanceAnalysis(g, opt));
}
CheckResult check_distance_invariance(const Graft& g,
                                      const EngineOptions& opt) {
  return check_distance_invariance(InstanceAnalysis(g, opt));
}
CheckResult check_nonpositive_distance(const Graft& g,
                                       const EngineOptions& opt) {
  return check_nonpositive_distance(InstanceAnalysis(g, opt));
}
CheckResult check_kl_equivalence(const Graft& g, const EngineOptions& opt) {
  return check_kl_equivalence(InstanceAnalysis(g, opt));
}
CheckResult check_balanced_weights(const Graft& g, const CombDesignation& d,
                                   const EngineOptions& opt) {
  return check_balanced_weights(InstanceAnalysis(g, opt), d);
}
CheckResult check_incomppath(const Graft& g, const CombDesignation& d,
                             const EngineOptions& opt) {
  return check_incomppath(InstanceAnalysis(g, opt), d);
}
CheckResult check_dm_antisymmetry(const Graft& g, const CombDesignation& d,
                                  const EngineOptions& opt) {
  return check_dm_antisymmetry(InstanceAnalysis(g, opt), d);
}
CheckResult check_ear_lemmas(const Graft& g, const CombDesignation& d,
                             const EngineOptions& opt) {
  return check_ear_lemmas(InstanceAnalysis(g, opt), d);
}
CheckResult check_relativepath(const Graft& g, const CombDesignation& d,
                               const EngineOptions& opt) {
  return check_relativepath(InstanceAnalysis(g, opt), d);
}
CheckResult check_attribute_partition(const Graft& g,
                                      const CombDesignation& d,
                                      const EngineOptions& opt) {
  return check_attribute_partition(InstanceAnalysis(g, opt), d);
}

std::vector<CheckResult> verify_all(const Graft& g, const EngineOptions& opt) {
  InstanceAnalysis a(g, opt);
  std::vector<CheckResult> out;
  out.push_back(check_circuit_lemma(a));
  out.push_back(check_distance_invariance(a));
  out.push_back(check_nonpositive_distance(a));
  out.push_back(check_kl_equivalence(a));
  std::vector<CombDesignation> designations;
  try {
    designations = a.designations();
  } catch (const CapExceededError&) {
    designations.clear();
  }
  if (!designations.empty()) {
    const CombDesignation& d = designations.front();
    out.push_back(check_balanced_weights(a, d));
    out.push_back(check_incomppath(a, d));
    out.push_back(check_dm_antisymmetry(a, d));
    out.push_back(check_ear_lemmas(a, d));
    out.push_back(check_relativepath(a, d));
    out.push_back(check_attribute_partition(a, d));
  }
  std::sort(out.begin(), out.end(),
            [](const CheckResult& x, const CheckResult& y) {
              return x.name < y.name;
            });
  return out;
}

std::vector<oracle::OracleReport> cross_check_engine_vs_oracle(
    const Graft& g, const EngineOptions& opt) {
  std::vector<oracle::OracleReport> rows;
  std::string fp = fingerprint(g);
  auto row = [&](const std::string& quantity, const std::string& ov,
                 const std::string& ev) {
    rows.push_back({fp, quantity, ov, ev, ov == ev});
  };
  auto join_ids = [](const EdgeSet& s) {
    std::string out;
    for (EdgeId e : s.ids()) {
      if (!out.empty()) out += ",";
      out += std::to_string(e);
    }
    return out;
  };

  auto mins = oracle::brute_min_joins(g, opt);
  row("nu", std::to_string(mins.nu), std::to_string(tjoin::nu(g, opt)));

  auto mj = tjoin::min_join(g, opt);
  row("min_join", "valid size=" + std::to_string(mins.nu),
      std::string(is_join(g, mj.join) ? "valid" : "invalid") +
          " size=" + std::to_string(mj.join.count()));

  row("allowed_edges", join_ids(oracle::brute_allowed(g, opt)),
      join_ids(tjoin::allowed_edges(g, opt)));

  auto comp = g.graph.component_ids();
  const EdgeSet& f = mins.joins.front();
  for (VertexId x = 0; x < g.graph.vertex_count(); ++x)
    for (VertexId y = x + 1; y < g.graph.vertex_count(); ++y) {
      if (comp[x] != comp[y]) continue;
      int ov = oracle::min_path_weight(g.graph, f, x, y, opt);
      int ev = tjoin::dist(g, x, y, opt);
      row("dist:" + g.graph.label(x) + "," + g.graph.label(y),
          std::to_string(ov), std::to_string(ev));
    }
  return rows;
}

}  // namespace verify
}  // namespace graft
