#pragma once

#include <cstddef>
#include <vector>

#include "cech/diagram.hpp"
#include "cech/geometry.hpp"
#include "cech/simplex.hpp"

namespace cech {

/// All simplices of the Cech complex C(P; alpha) with dimension <= max_dim,
/// sorted by (filtration value, dim, lex), paired with their values.
/// Enumerates cliques of the 2*alpha neighborhood graph and filters by
/// miniball radius.
std::vector<std::pair<Simplex, double>> enumerate_cech(const PointCloud& cloud, double alpha,
                                                       int max_dim,
                                                       std::size_t simplex_guard = 2000000);

/// Ground-truth persistence of the Cech filtration by standard Z2 boundary
/// matrix reduction. Reports dimensions 0 .. max_dim-1; zero-length intervals
/// are dropped. Independent of the annotation engine.
PersistenceDiagram oracle_cech(const PointCloud& cloud, double alpha_max, int max_dim,
                               std::size_t simplex_guard = 2000000);

/// Betti numbers of an explicit complex over Z2 via boundary ranks.
std::vector<int> betti_numbers(const std::vector<Simplex>& complex, int up_to_dim);

/// Bottleneck distance between the dim-restricted diagrams. Essential classes
/// match only essential classes (cost = birth difference), never the
/// diagonal; mismatched essential counts give +infinity.
double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim);

/// Bottleneck after mapping (b, d) to (log max(b, floor), log max(d, floor)),
/// with log inf = inf.
double log_bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim,
                      double floor_value);

/// Checks C(P; alpha) <= R(P; alpha) <= C(P; sqrt(2) alpha) by explicit
/// enumeration up to max_dim.
bool cech_rips_sandwich_check(const PointCloud& cloud, double alpha, int max_dim);

}  // namespace cech
