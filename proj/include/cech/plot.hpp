#pragma once

#include <string>

#include "cech/diagram.hpp"
#include "cech/trace.hpp"

namespace cech {

/// Standalone SVG: the region above the diagonal in [0, alpha_max]^2, one
/// color series per dimension, dots for finite deaths and triangles along the
/// top edge for essential classes.
std::string plot_diagram_svg(const PersistenceDiagram& diagram, double alpha_max);

/// Standalone SVG: simplex count against scale, with markers at collapses.
std::string plot_trace_svg(const RunTrace& trace);

}  // namespace cech
