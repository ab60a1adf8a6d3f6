#include "graft/dot_export.hpp"

#include <sstream>

namespace graft {
namespace io {

namespace {

const char* kPalette[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f",
                          "#cab2d6", "#ffff99", "#1f78b4", "#33a02c",
                          "#e31a1c", "#ff7f00", "#6a3d9a", "#b15928"};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

std::string class_text(const Multigraph& g, const std::vector<VertexId>& cls) {
  std::string out = "{";
  for (size_t i = 0; i < cls.size(); ++i) {
    if (i) out += ",";
    out += g.label(cls[i]);
  }
  return out + "}";
}

}  // namespace

std::string dot_export(const Graft& g,
                       const std::vector<FactorComponent>& components,
                       const KLPartition& kl, const EdgeSet& allowed,
                       const DMPoset* poset, const AttributeMap* attrs) {
  std::ostringstream out;
  out << "graph decomposition {\n";
  out << "  node [style=filled];\n";
  for (const auto& c : components) {
    out << "  subgraph cluster_" << c.id << " {\n";
    out << "    label=\"C" << c.id << "\";\n";
    for (VertexId v : c.vertices) {
      const char* fill =
          kPalette[kl.class_of[v] % (sizeof(kPalette) / sizeof(*kPalette))];
      out << "    " << quoted(g.graph.label(v)) << " [fillcolor=\"" << fill
          << "\"];\n";
    }
    out << "  }\n";
  }
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    auto [u, v] = g.graph.ends(e);
    out << "  " << quoted(g.graph.label(u)) << " -- "
        << quoted(g.graph.label(v))
        << (allowed.contains(e) ? ";\n" : " [style=dashed];\n");
  }
  out << "}\n";

  if (poset) {
    out << "digraph hasse {\n";
    for (const auto& c : poset->components) out << "  C" << c.id << ";\n";
    for (auto [lower, upper] : poset->hasse) {
      out << "  C" << lower << " -> C" << upper;
      if (attrs && lower == attrs->base_component) {
        for (auto [comp, cls] : attrs->attribute)
          if (comp == upper) {
            out << " [label=" << quoted(class_text(g.graph, kl.classes[cls]))
                << "]";
            break;
          }
      }
      out << ";\n";
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace io
}  // namespace graft
