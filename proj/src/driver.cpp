#include "cech/driver.hpp"

#include <queue>

#include "cech/persistence.hpp"

namespace cech {

namespace {

struct QueueItem {
  double scale;
  Simplex simplex;
};

struct QueueOrder {
  // Min-queue on (scale, dim, lex).
  bool operator()(const QueueItem& a, const QueueItem& b) const {
    if (a.scale != b.scale) return a.scale > b.scale;
    if (a.simplex.size() != b.simplex.size()) return a.simplex.size() > b.simplex.size();
    return a.simplex > b.simplex;
  }
};

}  // namespace

CollapseResult run_collapse(const PointCloud& cloud, const RunConfig& cfg,
                            const Dendrogram& dendrogram) {
  cfg.validate();
  if (dendrogram.n != cloud.size())
    throw std::invalid_argument("run_collapse: dendrogram does not match cloud");

  PersistenceEngine engine;
  if (cfg.observer) engine.set_observer(cfg.observer);
  ClusterState clusters(cloud.size());
  RunTrace trace;
  std::priority_queue<QueueItem, std::vector<QueueItem>, QueueOrder> queue;

  // Vertex labels are cluster indices; rep_coords maps a label to the current
  // representative's coordinates.
  std::vector<int> rep_point(static_cast<std::size_t>(cloud.size()));
  for (int i = 0; i < cloud.size(); ++i) rep_point[static_cast<std::size_t>(i)] = i;

  auto simplex_scale = [&](const Simplex& s) {
    Simplex reps;
    reps.reserve(s.size());
    for (VertexId v : s) reps.push_back(rep_point[static_cast<std::size_t>(v)]);
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return cech_value(reps, cloud.coords());
  };

  for (int i = 0; i < cloud.size(); ++i) queue.push(QueueItem{0.0, Simplex{i}});

  // The scan frontier alpha' is realized by next_event: every dendrogram
  // event before it has been applied, so the pending window is [alpha', ...).
  double engine_frontier = 0.0;  // largest scale handed to the engine
  int level = 0;
  std::size_t adds_since_scan = 0;
  std::size_t next_event = 0;

  const auto guard_cap = [&]() {
    if (engine.complex().simplex_count() > cfg.memory_cap)
      throw MemoryCapExceeded(cfg.memory_cap, trace);
  };

  while (!queue.empty()) {
    const QueueItem item = queue.top();  // step 1
    queue.pop();
    if (item.scale > cfg.alpha_max) break;  // step 2

    if (!engine.contains(item.simplex)) {  // step 3
      const double t = std::max(item.scale, engine_frontier);
      // Closure insertion also covers the rare facet whose miniball rounded
      // a hair above ours and so has not popped yet.
      const auto events = engine.add_closure(item.simplex, t);
      engine_frontier = t;
      adds_since_scan += events.size();
      const std::size_t count = engine.complex().simplex_count();
      for (std::size_t k = events.size(); k > 0; --k)
        trace.samples.push_back(
            TraceSample{t, count - k + 1, TraceSample::Tag::Insert});
      guard_cap();
    }

    // Step 4: expand by live clusters; each cofacet is enqueued once, from
    // its largest-label facet.
    if (simplex_dim(item.simplex) + 1 <= cfg.max_dim) {
      for (const auto& [c, cluster] : clusters.live()) {
        if (c <= item.simplex.back()) continue;
        Simplex tau = item.simplex;
        tau.push_back(c);
        const double r = simplex_scale(tau);
        if (r <= cfg.alpha_max) queue.push(QueueItem{r, std::move(tau)});
      }
    }

    // Step 5: collapse scan once enough simplices have accumulated.
    if (adds_since_scan >= cfg.batch) {
      adds_since_scan = 0;
      const double scan_upper = cfg.epsilon * item.scale;
      bool applied = false;
      while (next_event < dendrogram.events.size() &&
             dendrogram.events[next_event].scale < scan_upper) {
        const LinkageEvent& event = dendrogram.events[next_event++];
        const auto contraction = clusters.advance(event, cloud);
        const Simplex edge{contraction.keep, contraction.drop};
        const double t = std::max(item.scale, engine_frontier);
        if (!engine.contains(edge)) {
          // The linkage edge never entered the filtration; include it at the
          // collapse scale.
          engine.add_closure(edge, t);
          trace.samples.push_back(
              TraceSample{t, engine.complex().simplex_count(), TraceSample::Tag::Insert});
        }
        engine.contract_edge(contraction.keep, contraction.drop, t);
        engine_frontier = t;
        rep_point[static_cast<std::size_t>(event.i)] = clusters.representative(event.i);
        trace.samples.push_back(
            TraceSample{t, engine.complex().simplex_count(), TraceSample::Tag::Collapse});
        guard_cap();
        applied = true;
      }
      if (applied) {  // step 5b
        decltype(queue) fresh;
        std::swap(queue, fresh);
        for (const auto& [c, cluster] : clusters.live()) queue.push(QueueItem{0.0, Simplex{c}});
        ++level;
      }
    }
  }

  // Step 6: survivors become essential classes.
  CollapseResult result;
  PersistenceDiagram full = engine.finalize(cfg.alpha_max);
  for (const Interval& iv : full.intervals)
    if (iv.dim < cfg.max_dim) result.diagram.intervals.push_back(iv);
  result.diagram.sort();
  result.trace = std::move(trace);
  result.final_simplex_count = engine.complex().simplex_count();
  result.levels = level;
  return result;
}

}  // namespace cech
