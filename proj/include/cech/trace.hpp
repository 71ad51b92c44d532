#pragma once

#include <cstddef>
#include <vector>

namespace cech {

/// Simplex-count trace of a persistence run; one sample per engine event.
struct TraceSample {
  enum class Tag { Insert, Collapse };
  double scale = 0.0;
  std::size_t simplex_count = 0;
  Tag tag = Tag::Insert;
};

struct RunTrace {
  std::vector<TraceSample> samples;

  std::size_t peak_count() const {
    std::size_t peak = 0;
    for (const TraceSample& s : samples)
      if (s.simplex_count > peak) peak = s.simplex_count;
    return peak;
  }

  bool has_strict_decrease() const {
    for (std::size_t i = 1; i < samples.size(); ++i)
      if (samples[i].simplex_count < samples[i - 1].simplex_count) return true;
    return false;
  }
};

}  // namespace cech
