#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cech/geometry.hpp"

namespace cech {

/// Noisy wedge of circles: counts[k] points on the circle of radius radii[k]
/// centered at (0, radii[k]), radial noise uniform in [(1-noise)r, (1+noise)r].
PointCloud gen_circle_wedge(const std::vector<int>& counts, const std::vector<double>& radii,
                            double noise, std::uint64_t seed);

/// The embedding S^2 -> R^4, (x, y, z) |-> (xy, xz, y^2 - z^2, 2yz); even, so
/// antipodal points coincide and the image samples RP^2.
Eigen::Vector4d rp2_embed(double x, double y, double z);

PointCloud gen_rp2(int n, std::uint64_t seed);

/// Lorenz system (sigma = 10, r = 28, b = 8/3), classical fixed-step RK4.
/// Returns the n per-sample sums x + y + z, the first sample taken at
/// `initial` before any step.
std::vector<double> gen_lorenz(int n, double step, const Point& initial);

/// Time-delay embedding: point i = (y_i, y_{i+delay}, ..., y_{i+(dim-1)delay}).
PointCloud delay_embed(const std::vector<double>& series, int delay, int dim);

/// Smallest lag i in [1, max_lag] with A(i-1) > A(i) < A(i+1), where A is the
/// mean-removed discrete autocorrelation averaged over the overlap. Empty if
/// no such lag exists.
std::optional<int> first_autocorrelation_minimum(const std::vector<double>& series, int max_lag);

struct LorenzEmbedding {
  PointCloud cloud;
  int delay = 0;
};

/// The full time-delay pipeline of the Lorenz experiment: integrate, discard
/// the transient, detect the delay, embed.
LorenzEmbedding lorenz_delay_embedding(int n, double step, int discard, int max_lag,
                                       int embed_dim);

constexpr double kLorenzDefaultStep = 0.03;
constexpr int kLorenzDefaultDiscard = 1000;

}  // namespace cech
