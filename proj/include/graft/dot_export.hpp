#pragma once

#include <string>

#include "graft/decomposition.hpp"

namespace graft {
namespace io {

// Renders the decomposition as Graphviz text: one undirected graph with a
// cluster per factor-component, nodes filled by their class, allowed edges
// solid and the rest dashed; followed, when `poset` is given, by a digraph
// of the covering relation. With `attrs`, Hasse edges out of its base
// component carry the attribute class as label.
std::string dot_export(const Graft& g,
                       const std::vector<FactorComponent>& components,
                       const KLPartition& kl, const EdgeSet& allowed,
                       const DMPoset* poset, const AttributeMap* attrs);

}  // namespace io
}  // namespace graft
