#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace cech {

using VertexId = int;

/// A simplex is its sorted list of vertex labels. The empty vector is only
/// ever used to denote the root path of a simplex tree.
using Simplex = std::vector<VertexId>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

inline bool simplex_valid(const Simplex& s) {
  if (s.empty()) return false;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] >= s[i + 1]) return false;
  return s.front() >= 0;
}

inline bool simplex_has(const Simplex& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

/// Dimension-then-lexicographic order; the enumeration order used throughout.
struct SimplexOrder {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline Simplex simplex_with(Simplex s, VertexId v) {
  s.insert(std::upper_bound(s.begin(), s.end(), v), v);
  return s;
}

inline Simplex simplex_without(const Simplex& s, VertexId v) {
  Simplex out;
  out.reserve(s.size());
  for (VertexId u : s)
    if (u != v) out.push_back(u);
  return out;
}

inline bool simplex_subset(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::string simplex_to_string(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace cech
