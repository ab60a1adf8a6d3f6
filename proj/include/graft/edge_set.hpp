#pragma once

#include <cstdint>
#include <vector>

namespace graft {

using VertexId = int;
using EdgeId = int;

// Set of edge ids over a fixed universe [0, m). Packed bitset; one word for
// grafts with up to 64 edges, more words beyond that.
class EdgeSet {
public:
  EdgeSet() : universe_(0) {}
  explicit EdgeSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static EdgeSet from_ids(int universe, const std::vector<EdgeId>& ids) {
    EdgeSet s(universe);
    for (EdgeId e : ids) s.insert(e);
    return s;
  }
  // Low 'universe' bits of a mask; only valid for universes up to 64.
  static EdgeSet from_mask(int universe, std::uint64_t mask) {
    EdgeSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  int universe() const { return universe_; }
  bool contains(EdgeId e) const {
    return (words_[e >> 6] >> (e & 63)) & 1;
  }
  void insert(EdgeId e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(EdgeId e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  void flip(EdgeId e) { words_[e >> 6] ^= std::uint64_t{1} << (e & 63); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_) if (w) return false;
    return true;
  }

  EdgeSet& operator^=(const EdgeSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  EdgeSet& operator|=(const EdgeSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  EdgeSet& operator&=(const EdgeSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }

  bool operator==(const EdgeSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }
  bool operator!=(const EdgeSet& o) const { return !(*this == o); }

  std::vector<EdgeId> ids() const {
    std::vector<EdgeId> out;
    for (int e = 0; e < universe_; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }

  // Order on the sorted id sequences: {0,3} < {1,2}.
  bool lex_less(const EdgeSet& o) const { return ids() < o.ids(); }
  // (size, lex) order used when listing enumerated join families.
  bool size_lex_less(const EdgeSet& o) const {
    int a = count(), b = o.count();
    if (a != b) return a < b;
    return lex_less(o);
  }

private:
  int universe_;
  std::vector<std::uint64_t> words_;
};

}  // namespace graft
