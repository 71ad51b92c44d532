#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace cech {

constexpr double kInfDeath = std::numeric_limits<double>::infinity();

struct Interval {
  int dim = 0;
  double birth = 0.0;
  double death = kInfDeath;

  double persistence() const { return death - birth; }
  bool essential() const { return std::isinf(death); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline bool interval_less(const Interval& a, const Interval& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.birth != b.birth) return a.birth < b.birth;
  return a.death < b.death;
}

struct PersistenceDiagram {
  std::vector<Interval> intervals;

  void sort() { std::sort(intervals.begin(), intervals.end(), interval_less); }

  std::vector<Interval> in_dim(int dim) const {
    std::vector<Interval> out;
    for (const Interval& iv : intervals)
      if (iv.dim == dim) out.push_back(iv);
    return out;
  }

  /// Clamp all deaths to alpha_max; classes alive at the end of a truncated
  /// computation and classes dying just past it become indistinguishable.
  PersistenceDiagram capped(double alpha_max) const {
    PersistenceDiagram out;
    for (Interval iv : intervals) {
      iv.death = std::min(iv.death, alpha_max);
      if (iv.death > iv.birth) out.intervals.push_back(iv);
    }
    out.sort();
    return out;
  }
};

/// Multiset equality with per-coordinate tolerance (inf matches only inf).
inline bool diagrams_match(const PersistenceDiagram& a, const PersistenceDiagram& b,
                           double tol) {
  if (a.intervals.size() != b.intervals.size()) return false;
  auto sa = a, sb = b;
  sa.sort();
  sb.sort();
  for (std::size_t i = 0; i < sa.intervals.size(); ++i) {
    const Interval &x = sa.intervals[i], &y = sb.intervals[i];
    if (x.dim != y.dim) return false;
    if (std::abs(x.birth - y.birth) > tol) return false;
    if (x.essential() != y.essential()) return false;
    if (!x.essential() && std::abs(x.death - y.death) > tol) return false;
  }
  return true;
}

}  // namespace cech
