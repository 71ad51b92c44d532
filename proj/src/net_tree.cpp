#include "cech/net_tree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "cech/driver.hpp"
#include "cech/persistence.hpp"

namespace cech {

std::vector<int> greedy_net(const std::vector<int>& points, double delta,
                            const PointCloud& cloud) {
  if (delta <= 0.0) throw std::invalid_argument("greedy_net: delta must be positive");
  std::vector<int> kept;
  for (int p : points) {
    bool covered = false;
    for (int q : kept)
      if ((cloud.coords().row(p) - cloud.coords().row(q)).norm() <= delta) {
        covered = true;
        break;
      }
    if (!covered) kept.push_back(p);
  }
  return kept;
}

NetTree build_net_tree(const PointCloud& cloud, double alpha0, double epsilon,
                       double alpha_max) {
  if (alpha0 <= 0.0 || epsilon <= 0.0)
    throw std::invalid_argument("build_net_tree: alpha0 and epsilon must be positive");
  NetTree tree;
  tree.alpha0 = alpha0;
  tree.epsilon = epsilon;

  int m = 0;
  while (alpha0 * std::pow(1.0 + epsilon, m) < alpha_max) ++m;

  std::vector<int> level(static_cast<std::size_t>(cloud.size()));
  for (int i = 0; i < cloud.size(); ++i) level[static_cast<std::size_t>(i)] = i;
  tree.levels.push_back(level);
  for (int k = 0; k < m; ++k) {
    const double radius = alpha0 * epsilon * epsilon * std::pow(1.0 + epsilon, k - 1);
    std::vector<int> next = greedy_net(tree.levels.back(), radius, cloud);
    std::map<int, int> projection;
    for (int p : tree.levels.back()) {
      int best = next.front();
      double best_d = (cloud.coords().row(p) - cloud.coords().row(best)).norm();
      for (int q : next) {
        const double d = (cloud.coords().row(p) - cloud.coords().row(q)).norm();
        if (d < best_d) {  // ties keep the smallest index: next is ascending
          best_d = d;
          best = q;
        }
      }
      projection[p] = best;
    }
    tree.projections.push_back(std::move(projection));
    tree.levels.push_back(std::move(next));
  }
  return tree;
}

std::vector<NetFiltrationEvent> net_filtration_events(const NetTree& tree,
                                                      const PointCloud& cloud, double alpha_max,
                                                      int max_dim, std::size_t memory_cap) {
  std::vector<NetFiltrationEvent> events;
  const double eps = tree.epsilon;
  const double alpha0 = tree.alpha0;
  const int m = tree.top_level();

  std::size_t total = 0;
  for (int k = 0; k <= m; ++k) {
    const double window_lo = (k == 0) ? 0.0 : alpha0 * std::pow(1.0 + eps, k);
    const double window_hi = alpha0 * std::pow(1.0 + eps, k + 1);
    if (window_lo > alpha_max) break;

    // All simplices on level k whose Cech value lands in this window. Cliques
    // of the neighborhood graph bound the enumeration.
    const auto& pts = tree.levels[static_cast<std::size_t>(k)];
    const double reach = 2.0 * std::min(window_hi, alpha_max);
    std::map<int, std::vector<int>> neighbors;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if ((cloud.coords().row(pts[i]) - cloud.coords().row(pts[j])).norm() <= reach) {
          neighbors[pts[i]].push_back(pts[j]);
          neighbors[pts[j]].push_back(pts[i]);
        }
    for (auto& [p, nb] : neighbors) std::sort(nb.begin(), nb.end());

    std::vector<NetFiltrationEvent> window_events;
    auto consider = [&](const Simplex& s) {
      const double value = cech_value(s, cloud.coords());
      if (value < window_lo || value >= window_hi || value > alpha_max) return;
      NetFiltrationEvent e;
      e.kind = NetFiltrationEvent::Kind::InsertSimplex;
      e.scale = value;
      e.simplex = s;
      e.level = k;
      window_events.push_back(std::move(e));
      if (++total > memory_cap)
        throw std::runtime_error("net_filtration_events: memory cap exceeded");
    };
    std::function<void(Simplex&)> extend = [&](Simplex& cur) {
      if (simplex_dim(cur) >= max_dim) return;
      auto it = neighbors.find(cur.back());
      if (it == neighbors.end()) return;
      for (int v : it->second) {
        if (v <= cur.back()) continue;
        bool ok = true;
        for (VertexId u : cur) {
          if (u == cur.back()) continue;
          const auto& nu = neighbors.at(u);
          if (!std::binary_search(nu.begin(), nu.end(), v)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        cur.push_back(v);
        consider(cur);
        extend(cur);
        cur.pop_back();
      }
    };
    for (int p : pts) {
      Simplex s{p};
      consider(s);
      extend(s);
    }
    std::sort(window_events.begin(), window_events.end(),
              [](const NetFiltrationEvent& a, const NetFiltrationEvent& b) {
                if (a.scale != b.scale) return a.scale < b.scale;
                return SimplexOrder{}(a.simplex, b.simplex);
              });
    for (auto& e : window_events) events.push_back(std::move(e));

    // Boundary shift to level k+1.
    if (k < m && window_hi <= alpha_max) {
      NetFiltrationEvent shift;
      shift.kind = NetFiltrationEvent::Kind::LevelShift;
      shift.scale = window_hi;
      shift.level = k;
      const auto& next = tree.levels[static_cast<std::size_t>(k + 1)];
      for (int p : pts)
        if (!std::binary_search(next.begin(), next.end(), p))
          shift.identifications.emplace_back(p, tree.projections[static_cast<std::size_t>(k)].at(p));
      events.push_back(std::move(shift));
    }
  }
  return events;
}

NetRunResult run_net_persistence(const PointCloud& cloud, double alpha0, double epsilon,
                                 double alpha_max, int max_dim, std::size_t memory_cap) {
  const NetTree tree = build_net_tree(cloud, alpha0, epsilon, alpha_max);
  const auto events = net_filtration_events(tree, cloud, alpha_max, max_dim, memory_cap);

  PersistenceEngine engine;
  NetRunResult result;
  const auto guard = [&]() {
    if (engine.complex().simplex_count() > memory_cap)
      throw MemoryCapExceeded(memory_cap, result.trace);
  };
  for (const auto& event : events) {
    if (event.kind == NetFiltrationEvent::Kind::InsertSimplex) {
      if (engine.contains(event.simplex)) continue;
      const auto added = engine.add_closure(event.simplex, event.scale);
      const std::size_t count = engine.complex().simplex_count();
      for (std::size_t k = added.size(); k > 0; --k)
        result.trace.samples.push_back(
            TraceSample{event.scale, count - k + 1, TraceSample::Tag::Insert});
      guard();
    } else {
      for (const auto& [drop, keep] : event.identifications) {
        const Simplex edge{std::min(drop, keep), std::max(drop, keep)};
        if (!engine.contains(edge)) engine.add_closure(edge, event.scale);
        engine.contract_edge(keep, drop, event.scale);
        result.trace.samples.push_back(TraceSample{
            event.scale, engine.complex().simplex_count(), TraceSample::Tag::Collapse});
        guard();
      }
    }
  }

  PersistenceDiagram full = engine.finalize(alpha_max);
  for (const Interval& iv : full.intervals)
    if (iv.dim < max_dim) result.diagram.intervals.push_back(iv);
  result.diagram.sort();
  result.final_simplex_count = engine.complex().simplex_count();
  return result;
}

}  // namespace cech
