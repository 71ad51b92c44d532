#pragma once

#include <map>
#include <vector>

#include "cech/geometry.hpp"

namespace cech {

/// One complete-linkage merge: clusters i and j (i < j) join at scale s;
/// cluster i carries on, cluster j retires.
struct LinkageEvent {
  double scale = 0.0;
  int i = 0;
  int j = 0;
};

struct Dendrogram {
  std::vector<LinkageEvent> events;  // scales nondecreasing, exactly n - 1
  int n = 0;                         // initial cluster count
};

/// Complete-linkage hierarchical clustering. Naive distance-matrix scheme;
/// ties broken by smallest (i, j).
Dendrogram complete_linkage(const PointCloud& cloud);

struct Cluster {
  int representative = 0;        // a point index, member of `members`
  std::vector<int> members;      // sorted point indices
};

/// Live clusters after applying a prefix of linkage events. Single writer.
class ClusterState {
 public:
  explicit ClusterState(int n);

  struct Contraction {
    int keep = 0;  // cluster index i: the vertex that survives
    int drop = 0;  // cluster index j: the vertex contracted away
  };

  /// Applies one linkage event: unions members, retires cluster j, picks the
  /// member closest to the new member centroid as representative (ties by
  /// smallest point index). Returns the vertex-level contraction pair.
  Contraction advance(const LinkageEvent& event, const PointCloud& cloud);

  const std::map<int, Cluster>& live() const { return live_; }
  bool is_live(int cluster) const { return live_.count(cluster) > 0; }
  int representative(int cluster) const;
  int level() const { return level_; }

 private:
  std::map<int, Cluster> live_;
  int level_ = 0;
};

}  // namespace cech
