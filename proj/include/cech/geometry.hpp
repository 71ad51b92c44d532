#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "cech/simplex.hpp"

namespace cech {

using Point = Eigen::VectorXd;

/// Euclidean distance between two points given as arbitrary Eigen expressions
/// of the same shape.
template <typename DerivedA, typename DerivedB>
double euclidean_distance(const Eigen::MatrixBase<DerivedA>& p,
                          const Eigen::MatrixBase<DerivedB>& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("euclidean_distance: dimension mismatch");
  return (p.derived().template cast<double>() - q.derived().template cast<double>()).norm();
}

/// An ordered set of points in R^d. Row i of coords() is point i; indices are
/// stable identifiers used as vertex labels downstream.
class PointCloud {
 public:
  PointCloud() = default;
  explicit PointCloud(Eigen::MatrixXd coords);
  static PointCloud from_points(const std::vector<Point>& pts);

  int size() const { return static_cast<int>(coords_.rows()); }
  int dim() const { return static_cast<int>(coords_.cols()); }
  Point point(int i) const { return coords_.row(i).transpose(); }
  const Eigen::MatrixXd& coords() const { return coords_; }

  double diameter() const;

 private:
  Eigen::MatrixXd coords_;
};

struct Ball {
  Point center;
  double radius = 0.0;

  bool contains(const Eigen::Ref<const Eigen::VectorXd>& p, double rel_tol = 1e-9) const {
    return (p - center).norm() <= radius * (1.0 + rel_tol) + rel_tol;
  }
};

/// Smallest enclosing ball (Welzl move-to-front with a fixed shuffle derived
/// from the input size, so results are reproducible run to run).
Ball min_enclosing_ball(const std::vector<Point>& points);
Ball min_enclosing_ball(const Eigen::MatrixXd& coords, const std::vector<int>& indices);

/// Cech filtration value of a simplex: the miniball radius of its vertices.
/// Vertices of sigma index rows of coords.
double cech_value(const Simplex& sigma, const Eigen::MatrixXd& coords);
double cech_value(const Simplex& sigma, const PointCloud& cloud);

/// x in CH(rows of pts)?  Phase-1 simplex LP feasibility on
/// { lambda >= 0, sum lambda = 1, pts^T lambda = x }.
bool convex_hull_contains(const Eigen::MatrixXd& pts,
                          const Eigen::Ref<const Eigen::VectorXd>& x,
                          double tol = 1e-9);

/// Exact distance from x to CH(rows of pts), by projecting onto the affine
/// hulls of all support subsets of size <= d+1 (Caratheodory). Desk scale.
double distance_to_convex_hull(const Eigen::MatrixXd& pts,
                               const Eigen::Ref<const Eigen::VectorXd>& x);

}  // namespace cech
