#pragma once

#include <optional>
#include <vector>

#include "graft/core.hpp"

namespace graft {

// A maximal subgraft connected through allowed edges; isolated vertices form
// singleton components. Component ids are assigned by smallest contained
// vertex id.
struct FactorComponent {
  int id = 0;
  std::vector<VertexId> vertices;  // sorted
  EdgeSet edges;                   // allowed edges inside the component
};

// Equivalence classes of "same factor-component and distance zero".
struct KLPartition {
  std::vector<std::vector<VertexId>> classes;  // sorted, by smallest member
  std::vector<int> class_of;                   // vertex id -> class id
  std::vector<std::vector<int>> component_classes;  // component -> class ids
};

// Spine/tooth role assignment of a bipartition; valid when nu equals the
// tooth count.
struct CombDesignation {
  std::vector<VertexId> spine;  // sorted
  std::vector<VertexId> tooth;  // sorted

  bool in_tooth(VertexId v) const {
    return std::binary_search(tooth.begin(), tooth.end(), v);
  }
  bool in_spine(VertexId v) const {
    return std::binary_search(spine.begin(), spine.end(), v);
  }
};

// Factor-components ordered by id, the base relation, its reflexive
// transitive closure, and the covering pairs of the closure.
struct DMPoset {
  std::vector<FactorComponent> components;
  std::vector<std::vector<char>> base;     // base[i][j]: i related to j
  std::vector<std::vector<char>> closure;  // closure[i][j]: i below-equal j
  std::vector<std::pair<int, int>> hasse;  // (lower, upper) covers

  bool below(int i, int j) const { return closure[i][j]; }
};

// Labels every strict upper bound of a base component with one tooth-side
// class of that component.
struct AttributeMap {
  int base_component = 0;
  std::vector<int> tooth_classes;  // KL class ids inside tooth ∩ base comp
  // (upper component id, class id), sorted by component id
  std::vector<std::pair<int, int>> attribute;
  // class id -> upper component ids; classes without uppers keep empty rows
  std::vector<std::pair<int, std::vector<int>>> buckets;
};

std::vector<FactorComponent> factor_components(const Graft& g,
                                               const EngineOptions& opt = {});

KLPartition kl_partition(const Graft& g, const EngineOptions& opt = {});

// Candidate designations from the canonical 2-coloring (smallest vertex of
// every component in color 0), each color class tried as the tooth set.
// Empty when the graph is not bipartite or neither role assignment reaches
// nu = |tooth|.
std::vector<CombDesignation> comb_designations(const Graft& g,
                                               const EngineOptions& opt = {});

// Oracle-backed: every brute-forced minimum join meets every tooth's cut
// exactly once.
bool verify_comb_characterization(const Graft& g, const CombDesignation& d,
                                  const EngineOptions& opt = {});

// Base relation: H1 related to H2 when an edge joins spine(H2) to
// tooth(H1). Throws NotCombError for invalid designations and
// AntisymmetryViolationError if the closure acquires a 2-cycle.
DMPoset dm_relation(const Graft& g, const CombDesignation& d,
                    const EngineOptions& opt = {});

// Strict upper bounds of component c.
std::vector<int> upper_bounds(const DMPoset& p, int c);

// Shortest chain of distinct components from c1 to c2 linked by the base
// relation; ties broken toward smaller ids. Throws NotRelatedError when
// c1 == c2 or c2 is not above c1.
std::vector<int> defining_sequence(const DMPoset& p, int c1, int c2);

AttributeMap attributes(const Graft& g, const CombDesignation& d,
                        const DMPoset& p, int c0,
                        const EngineOptions& opt = {});

// Dulmage-Mendelsohn poset of a factorizable bipartite graph, obtained as
// the poset of the graft (G, V(G)) with the canonical color class as spine.
DMPoset classic_dm(const Multigraph& g, const EngineOptions& opt = {});

class InstanceAnalysis;

// Overloads reusing a prepared analysis; the Graft forms above delegate
// here.
DMPoset dm_relation(const InstanceAnalysis& a, const CombDesignation& d);
AttributeMap attributes(const InstanceAnalysis& a, const CombDesignation& d,
                        const DMPoset& p, int c0);

// Caches the per-instance quantities that the decomposition and verifier
// passes keep reusing. Not thread-safe; confine an instance to one thread.
class InstanceAnalysis {
public:
  explicit InstanceAnalysis(Graft g, EngineOptions opt = {});

  const Graft& graft() const { return graft_; }
  const EngineOptions& options() const { return opt_; }

  int nu() const;
  const EdgeSet& min_join() const;
  const EdgeSet& allowed() const;
  const std::vector<FactorComponent>& components() const;
  int component_of(VertexId v) const;
  // Distance matrix entry; oracle::kInfiniteDistance across components.
  int dist(VertexId x, VertexId y) const;
  const KLPartition& kl() const;
  const std::vector<CombDesignation>& designations() const;

private:
  const std::vector<std::vector<int>>& dist_matrix() const;

  Graft graft_;
  EngineOptions opt_;
  mutable std::optional<int> nu_;
  mutable std::optional<EdgeSet> min_join_;
  mutable std::optional<EdgeSet> allowed_;
  mutable std::optional<std::vector<FactorComponent>> components_;
  mutable std::optional<std::vector<int>> component_of_;
  mutable std::optional<std::vector<std::vector<int>>> dist_;
  mutable std::optional<KLPartition> kl_;
  mutable std::optional<std::vector<CombDesignation>> designations_;
};

}  // namespace graft
