#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graft/decomposition.hpp"

namespace graft {
namespace io {

// On-disk graft description. JSON object with fixed keys:
//
//   {
//     "version": 1,
//     "vertices": ["a0", "b1"],
//     "edges": [["a0", "b1"]],
//     "terminals": ["a0", "b1"],
//     "spine_hint": ["a0"]        // optional
//   }
//
// Edge ids are implicit from list position. Unknown keys are rejected; the
// full grammar lives in docs/graft-format.md.
struct GraftDocument {
  int version = 1;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> terminals;
  bool has_spine_hint = false;
  std::vector<std::string> spine_hint;
};

// Throws InputError with 1-based line/column on syntax errors and with the
// offending element on structural ones.
GraftDocument parse_graft_document(const std::string& text);

// Fixed key order and indentation; parse(serialize(d)) == d.
std::string serialize(const GraftDocument& doc);

// Semantic validation: labels resolve, terminal parity holds.
Graft to_graft(const GraftDocument& doc);

GraftDocument from_graft(const Graft& g);
GraftDocument from_graft(const Graft& g, const CombDesignation& d);

// Resolves the document's spine hint against the computed designations;
// the hint must match one designation's spine set exactly.
const CombDesignation& pick_designation(
    const GraftDocument& doc, const Graft& g,
    const std::vector<CombDesignation>& designations);

}  // namespace io
}  // namespace graft
