#pragma once

#include <string>
#include <vector>

#include "graft/decomposition.hpp"
#include "graft/oracle.hpp"

namespace graft {
namespace verify {

// Executable forms of the lemma and theorem statements. A failing check on
// any instance is release-blocking; vacuous passes are distinguished from
// witnessed ones through the `witnesses` count (objects actually examined).

struct CheckResult {
  enum class Status { passed, failed, cap_exceeded };

  std::string name;
  Status status = Status::passed;
  long witnesses = 0;
  std::string detail;          // counterexample or cap description
  std::string instance;        // graft fingerprint, for replay

  bool passed() const { return status == Status::passed; }
};

// Zero-weight circuits flip minimum joins into minimum joins, and their
// edges are all allowed.
CheckResult check_circuit_lemma(const InstanceAnalysis& a);
// Path-enumeration distances agree across every pair of brute-forced
// minimum joins.
CheckResult check_distance_invariance(const InstanceAnalysis& a);
// Distances inside a factor-component never exceed zero.
CheckResult check_nonpositive_distance(const InstanceAnalysis& a);
// "Same component and distance zero" is transitive.
CheckResult check_kl_equivalence(const InstanceAnalysis& a);
// Balanced paths hit the exact weight table for their end roles.
CheckResult check_balanced_weights(const InstanceAnalysis& a,
                                   const CombDesignation& d);
// Within a component: spine-tooth pairs at -1, spine pairs at 0, tooth
// pairs at 0 or -2.
CheckResult check_incomppath(const InstanceAnalysis& a,
                             const CombDesignation& d);
// The closed relation has no 2-cycle between distinct components.
CheckResult check_dm_antisymmetry(const InstanceAnalysis& a,
                                  const CombDesignation& d);
// Balanced ears end in tooth vertices of their component at weight 2 with
// equivalent ends; balanced returns from a -2 path's far end avoid the
// path's exterior.
CheckResult check_ear_lemmas(const InstanceAnalysis& a,
                             const CombDesignation& d);
// Weight -2 tooth-tooth paths decompose into weight-2 ears outside the
// component and weight -2 stretches inside it.
CheckResult check_relativepath(const InstanceAnalysis& a,
                               const CombDesignation& d);
// Upper-bound labels exist, are unique, respect seeding/adjacency, and
// distinct-label siblings share no upper bound.
CheckResult check_attribute_partition(const InstanceAnalysis& a,
                                      const CombDesignation& d);

// Convenience forms building a fresh analysis.
CheckResult check_circuit_lemma(const Graft& g, const EngineOptions& opt = {});
CheckResult check_distance_invariance(const Graft& g,
                                      const EngineOptions& opt = {});
CheckResult check_nonpositive_distance(const Graft& g,
                                       const EngineOptions& opt = {});
CheckResult check_kl_equivalence(const Graft& g, const EngineOptions& opt = {});
CheckResult check_balanced_weights(const Graft& g, const CombDesignation& d,
                                   const EngineOptions& opt = {});
CheckResult check_incomppath(const Graft& g, const CombDesignation& d,
                             const EngineOptions& opt = {});
CheckResult check_dm_antisymmetry(const Graft& g, const CombDesignation& d,
                                  const EngineOptions& opt = {});
CheckResult check_ear_lemmas(const Graft& g, const CombDesignation& d,
                             const EngineOptions& opt = {});
CheckResult check_relativepath(const Graft& g, const CombDesignation& d,
                               const EngineOptions& opt = {});
CheckResult check_attribute_partition(const Graft& g,
                                      const CombDesignation& d,
                                      const EngineOptions& opt = {});

// Every applicable check, comb-dependent ones under the first designation
// when one exists, sorted by check name.
std::vector<CheckResult> verify_all(const Graft& g,
                                    const EngineOptions& opt = {});

// Engine-versus-oracle comparison rows: nu, minimum-join validity and size,
// allowed edges, and all within-component pairwise distances.
std::vector<oracle::OracleReport> cross_check_engine_vs_oracle(
    const Graft& g, const EngineOptions& opt = {});

}  // namespace verify
}  // namespace graft
