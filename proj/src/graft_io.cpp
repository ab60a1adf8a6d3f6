#include "graft/graft_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "graft/errors.hpp"

namespace graft {
namespace io {

namespace {

using nlohmann::ordered_json;

std::pair<int, int> line_col(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::vector<std::string> string_list(const ordered_json& j,
                                     const std::string& key) {
  if (!j.is_array())
    throw InputError("field \"" + key + "\" must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string())
      throw InputError("field \"" + key + "\" must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

GraftDocument parse_graft_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw InputError(e.what(), line, col);
  }
  if (!j.is_object()) throw InputError("document must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "version" && key != "vertices" && key != "edges" &&
        key != "terminals" && key != "spine_hint")
      throw InputError("unknown field \"" + key + "\"");
  }
  if (!j.contains("version") || !j["version"].is_number_integer())
    throw InputError("missing integer field \"version\"");
  GraftDocument doc;
  doc.version = j["version"].get<int>();
  if (doc.version != 1)
    throw InputError("unsupported version " + std::to_string(doc.version));
  if (!j.contains("vertices") || !j.contains("edges") ||
      !j.contains("terminals"))
    throw InputError("document needs \"vertices\", \"edges\", \"terminals\"");
  doc.vertices = string_list(j["vertices"], "vertices");
  if (!j["edges"].is_array())
    throw InputError("field \"edges\" must be an array");
  for (const auto& pair : j["edges"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_string())
      throw InputError("each edge must be a two-string array");
    doc.edges.emplace_back(pair[0].get<std::string>(),
                           pair[1].get<std::string>());
  }
  doc.terminals = string_list(j["terminals"], "terminals");
  if (j.contains("spine_hint")) {
    doc.has_spine_hint = true;
    doc.spine_hint = string_list(j["spine_hint"], "spine_hint");
  }
  return doc;
}

std::string serialize(const GraftDocument& doc) {
  ordered_json j;
  j["version"] = doc.version;
  j["vertices"] = doc.vertices;
  auto edges = ordered_json::array();
  for (const auto& [a, b] : doc.edges)
    edges.push_back(ordered_json::array({a, b}));
  j["edges"] = std::move(edges);
  j["terminals"] = doc.terminals;
  if (doc.has_spine_hint) j["spine_hint"] = doc.spine_hint;
  return j.dump(2) + "\n";
}

Graft to_graft(const GraftDocument& doc) {
  Multigraph g = build_multigraph(doc.vertices, doc.edges);
  std::vector<VertexId> terminals;
  for (const auto& label : doc.terminals) {
    VertexId v = g.vertex_id(label);
    if (v < 0) throw InputError("unknown terminal label \"" + label + "\"");
    terminals.push_back(v);
  }
  try {
    return validate_graft(g, std::move(terminals));
  } catch (const OddComponentError& e) {
    std::string members;
    for (VertexId v : e.component) {
      if (!members.empty()) members += ",";
      members += g.label(v);
    }
    throw InputError("odd terminal parity in component {" + members + "}");
  }
}

GraftDocument from_graft(const Graft& g) {
  GraftDocument doc;
  doc.vertices = g.graph.labels();
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    auto [u, v] = g.graph.ends(e);
    doc.edges.emplace_back(g.graph.label(u), g.graph.label(v));
  }
  for (VertexId v : g.terminals) doc.terminals.push_back(g.graph.label(v));
  return doc;
}

GraftDocument from_graft(const Graft& g, const CombDesignation& d) {
  GraftDocument doc = from_graft(g);
  doc.has_spine_hint = true;
  for (VertexId v : d.spine) doc.spine_hint.push_back(g.graph.label(v));
  return doc;
}

const CombDesignation& pick_designation(
    const GraftDocument& doc, const Graft& g,
    const std::vector<CombDesignation>& designations) {
  if (designations.empty())
    throw NotCombError("no designation reaches nu = tooth count");
  if (!doc.has_spine_hint) return designations.front();
  std::vector<VertexId> hint;
  for (const auto& label : doc.spine_hint) {
    VertexId v = g.graph.vertex_id(label);
    if (v < 0) throw InputError("unknown spine_hint label \"" + label + "\"");
    hint.push_back(v);
  }
  std::sort(hint.begin(), hint.end());
  for (const auto& d : designations)
    if (d.spine == hint) return d;
  throw NotCombError("spine_hint does not match a qualifying designation");
}

}  // namespace io
}  // namespace graft
