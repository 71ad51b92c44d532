#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "cech/diagram.hpp"
#include "cech/geometry.hpp"
#include "cech/trace.hpp"

namespace cech {

/// Hierarchy of nets P_0 >= P_1 >= ... >= P_m with nearest-point projections
/// between consecutive levels. Level k+1 is an alpha0 eps^2 (1+eps)^(k-1)-net
/// of level k.
struct NetTree {
  std::vector<std::vector<int>> levels;        // point indices, ascending
  std::vector<std::map<int, int>> projections;  // projections[k]: P_k -> P_{k+1}
  double alpha0 = 0.0;
  double epsilon = 0.0;

  int top_level() const { return static_cast<int>(levels.size()) - 1; }
};

/// Greedy net: scan indices ascending, keep a point iff it is more than delta
/// from every kept point. Satisfies both net conditions by construction.
std::vector<int> greedy_net(const std::vector<int>& points, double delta,
                            const PointCloud& cloud);

NetTree build_net_tree(const PointCloud& cloud, double alpha0, double epsilon,
                       double alpha_max);

struct NetFiltrationEvent {
  enum class Kind { InsertSimplex, LevelShift };
  Kind kind = Kind::InsertSimplex;
  double scale = 0.0;
  Simplex simplex;  // insert
  int level = 0;
  std::vector<std::pair<int, int>> identifications;  // shift: (drop u, keep pi(u)), u ascending
};

/// The event stream of the net filtration: within level k the complex is the
/// Cech complex on P_k, for scales in [alpha0(1+eps)^k, alpha0(1+eps)^{k+1})
/// (level 0 extends down to 0); at each boundary a LevelShift carries the
/// projection map.
std::vector<NetFiltrationEvent> net_filtration_events(const NetTree& tree,
                                                      const PointCloud& cloud, double alpha_max,
                                                      int max_dim,
                                                      std::size_t memory_cap = 5000000);

struct NetRunResult {
  PersistenceDiagram diagram;
  RunTrace trace;
  std::size_t final_simplex_count = 0;
};

/// Feeds the event stream into a persistence engine; level shifts become edge
/// contractions at the boundary scale. Reports dimensions 0 .. max_dim-1.
NetRunResult run_net_persistence(const PointCloud& cloud, double alpha0, double epsilon,
                                 double alpha_max, int max_dim,
                                 std::size_t memory_cap = 5000000);

}  // namespace cech
