#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "cech/clustering.hpp"
#include "cech/diagram.hpp"
#include "cech/geometry.hpp"
#include "cech/persistence.hpp"
#include "cech/trace.hpp"

namespace cech {

struct RunConfig {
  double epsilon = 0.0;     // collapse aggressiveness; 0 = plain Cech persistence
  double alpha_max = 1.0;   // terminal scale
  int max_dim = 2;          // D: largest simplex dimension inserted
  std::size_t batch = 1000; // L: adds between collapse scans
  std::uint64_t seed = 0;   // recorded with the run; the driver is deterministic
  std::size_t memory_cap = 5000000;
  // Invoked after every engine event; used by verification harnesses.
  std::function<void(const PersistenceEngine&, const EngineEvent&)> observer;

  void validate() const {
    if (epsilon < 0.0) throw std::invalid_argument("RunConfig: epsilon must be >= 0");
    if (alpha_max <= 0.0) throw std::invalid_argument("RunConfig: alpha_max must be positive");
    if (max_dim < 1) throw std::invalid_argument("RunConfig: max_dim must be positive");
    if (batch < 1) throw std::invalid_argument("RunConfig: batch must be positive");
  }
};

struct CollapseResult {
  PersistenceDiagram diagram;
  RunTrace trace;
  std::size_t final_simplex_count = 0;
  int levels = 0;  // collapse rounds performed
};

/// Raised when a run exceeds its simplex budget; carries the partial trace.
class MemoryCapExceeded : public std::runtime_error {
 public:
  MemoryCapExceeded(std::size_t cap, RunTrace trace)
      : std::runtime_error("simplex memory cap exceeded (" + std::to_string(cap) + ")"),
        partial_trace(std::move(trace)) {}
  RunTrace partial_trace;
};

/// The collapse-driven Cech persistence run: priority-queue expansion by
/// miniball scale, with batched edge contractions driven by dendrogram scans
/// over [alpha', epsilon * alpha).
CollapseResult run_collapse(const PointCloud& cloud, const RunConfig& cfg,
                            const Dendrogram& dendrogram);

}  // namespace cech
