#include "cech/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "cech/rng.hpp"

namespace cech {

PointCloud gen_circle_wedge(const std::vector<int>& counts, const std::vector<double>& radii,
                            double noise, std::uint64_t seed) {
  if (counts.size() != radii.size())
    throw std::invalid_argument("gen_circle_wedge: counts and radii length mismatch");
  if (noise < 0.0) throw std::invalid_argument("gen_circle_wedge: negative noise");
  Rng rng(seed);
  std::vector<Point> pts;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    const double r = radii[c];
    for (int k = 0; k < counts[c]; ++k) {
      const double theta = rng.uniform(0.0, 2.0 * M_PI);
      const double rho = rng.uniform((1.0 - noise) * r, (1.0 + noise) * r);
      Point p(2);
      p << rho * std::cos(theta), r + rho * std::sin(theta);
      pts.push_back(std::move(p));
    }
  }
  return PointCloud::from_points(pts);
}

Eigen::Vector4d rp2_embed(double x, double y, double z) {
  Eigen::Vector4d out;
  out << x * y, x * z, y * y - z * z, 2.0 * y * z;
  return out;
}

PointCloud gen_rp2(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_rp2: n must be positive");
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x, y, z, norm;
    do {
      x = rng.gaussian();
      y = rng.gaussian();
      z = rng.gaussian();
      norm = std::sqrt(x * x + y * y + z * z);
    } while (norm < 1e-12);
    pts.push_back(rp2_embed(x / norm, y / norm, z / norm));
  }
  return PointCloud::from_points(pts);
}

namespace {

Eigen::Vector3d lorenz_rhs(const Eigen::Vector3d& v) {
  constexpr double sigma = 10.0, r = 28.0, b = 8.0 / 3.0;
  Eigen::Vector3d out;
  out << sigma * (v(1) - v(0)), v(0) * (r - v(2)) - v(1), v(0) * v(1) - b * v(2);
  return out;
}

}  // namespace

std::vector<double> gen_lorenz(int n, double step, const Point& initial) {
  if (n < 1) throw std::invalid_argument("gen_lorenz: n must be positive");
  if (step <= 0.0) throw std::invalid_argument("gen_lorenz: step must be positive");
  if (initial.size() != 3) throw std::invalid_argument("gen_lorenz: initial point must be 3-d");
  Eigen::Vector3d v = initial;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.push_back(v.sum());
    const Eigen::Vector3d k1 = lorenz_rhs(v);
    const Eigen::Vector3d k2 = lorenz_rhs(v + 0.5 * step * k1);
    const Eigen::Vector3d k3 = lorenz_rhs(v + 0.5 * step * k2);
    const Eigen::Vector3d k4 = lorenz_rhs(v + step * k3);
    v += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!v.allFinite()) throw std::runtime_error("gen_lorenz: state became non-finite");
  }
  return out;
}

PointCloud delay_embed(const std::vector<double>& series, int delay, int dim) {
  if (delay < 1 || dim < 1) throw std::invalid_argument("delay_embed: delay and dim must be positive");
  const long needed = static_cast<long>(dim - 1) * delay + 1;
  if (static_cast<long>(series.size()) < needed)
    throw std::invalid_argument("delay_embed: series too short");
  const long n = static_cast<long>(series.size()) - static_cast<long>(dim - 1) * delay;
  Eigen::MatrixXd m(n, dim);
  for (long i = 0; i < n; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = series[static_cast<std::size_t>(i + j * delay)];
  return PointCloud(std::move(m));
}

std::optional<int> first_autocorrelation_minimum(const std::vector<double>& series, int max_lag) {
  if (max_lag < 2) throw std::invalid_argument("first_autocorrelation_minimum: max_lag < 2");
  const long n = static_cast<long>(series.size());
  if (n < static_cast<long>(max_lag) + 2)
    throw std::invalid_argument("first_autocorrelation_minimum: series too short");
  double mean = 0.0;
  for (double y : series) mean += y;
  mean /= static_cast<double>(n);
  std::vector<double> a(static_cast<std::size_t>(max_lag) + 2);
  for (int i = 0; i <= max_lag + 1; ++i) {
    double s = 0.0;
    for (long t = 0; t + i < n; ++t)
      s += (series[static_cast<std::size_t>(t)] - mean) *
           (series[static_cast<std::size_t>(t + i)] - mean);
    a[static_cast<std::size_t>(i)] = s / static_cast<double>(n - i);
  }
  for (int i = 1; i <= max_lag; ++i)
    if (a[i - 1] > a[i] && a[i] < a[i + 1]) return i;
  return std::nullopt;
}

LorenzEmbedding lorenz_delay_embedding(int n, double step, int discard, int max_lag,
                                       int embed_dim) {
  Point initial(3);
  initial << 1.0, 1.0, 1.0;
  std::vector<double> series = gen_lorenz(n + discard, step, initial);
  series.erase(series.begin(), series.begin() + discard);
  const auto delay = first_autocorrelation_minimum(series, max_lag);
  if (!delay) throw std::runtime_error("lorenz_delay_embedding: no autocorrelation minimum found");
  return LorenzEmbedding{delay_embed(series, *delay, embed_dim), *delay};
}

}  // namespace cech
