#include "cech/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace cech {

PointCloud::PointCloud(Eigen::MatrixXd coords) : coords_(std::move(coords)) {
  if (coords_.rows() < 1 || coords_.cols() < 1)
    throw std::invalid_argument("PointCloud: need at least one point in dimension >= 1");
  if (!coords_.allFinite())
    throw std::invalid_argument("PointCloud: non-finite coordinate");
}

PointCloud PointCloud::from_points(const std::vector<Point>& pts) {
  if (pts.empty()) throw std::invalid_argument("PointCloud: empty");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(pts.size()), pts.front().size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].size() != m.cols())
      throw std::invalid_argument("PointCloud: inconsistent dimensions");
    m.row(static_cast<Eigen::Index>(i)) = pts[i].transpose();
  }
  return PointCloud(std::move(m));
}

double PointCloud::diameter() const {
  double d2 = 0.0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      d2 = std::max(d2, (coords_.row(i) - coords_.row(j)).squaredNorm());
  return std::sqrt(d2);
}

namespace {

// Circumball of the support points (all on the boundary), via the Gram system
// 2 G x = diag(G) in the affine frame of the first point. Rank-deficient
// supports fall back to the minimum-norm least-squares solution.
Ball ball_on_boundary(const std::vector<const Point*>& support, int d) {
  if (support.empty()) return Ball{Point::Zero(d), -1.0};
  if (support.size() == 1) return Ball{*support[0], 0.0};
  const int k = static_cast<int>(support.size()) - 1;
  Eigen::MatrixXd v(d, k);
  for (int i = 0; i < k; ++i) v.col(i) = *support[i + 1] - *support[0];
  Eigen::MatrixXd g = v.transpose() * v;
  Eigen::VectorXd rhs = 0.5 * g.diagonal();
  Eigen::VectorXd x = g.completeOrthogonalDecomposition().solve(rhs);
  Point center = *support[0] + v * x;
  double radius = (center - *support[0]).norm();
  return Ball{std::move(center), radius};
}

Ball welzl(std::vector<const Point*>& pts, std::size_t n,
           std::vector<const Point*>& support, int d) {
  if (n == 0 || static_cast<int>(support.size()) == d + 1)
    return ball_on_boundary(support, d);
  const Point* p = pts[n - 1];
  Ball b = welzl(pts, n - 1, support, d);
  if (b.radius >= 0.0 &&
      (*p - b.center).squaredNorm() <= b.radius * b.radius * (1.0 + 1e-12) + 1e-300)
    return b;
  support.push_back(p);
  b = welzl(pts, n - 1, support, d);
  support.pop_back();
  // Move-to-front: keeps the expected recursion shallow.
  std::rotate(pts.begin(), pts.begin() + static_cast<long>(n - 1),
              pts.begin() + static_cast<long>(n));
  return b;
}

Ball miniball_of(std::vector<const Point*> pts, int d) {
  if (pts.empty()) throw std::invalid_argument("min_enclosing_ball: empty input");
  if (pts.size() == 1) return Ball{*pts[0], 0.0};
  if (pts.size() == 2) {
    Point c = 0.5 * (*pts[0] + *pts[1]);
    return Ball{std::move(c), 0.5 * (*pts[0] - *pts[1]).norm()};
  }
  // Deterministic shuffle derived from the input size.
  std::mt19937_64 gen(0x9E3779B97F4A7C15ull ^ (pts.size() * 0x9E3779B1ull));
  for (std::size_t i = pts.size() - 1; i > 0; --i)
    std::swap(pts[i], pts[gen() % (i + 1)]);
  std::vector<const Point*> support;
  support.reserve(static_cast<std::size_t>(d) + 1);
  return welzl(pts, pts.size(), support, d);
}

}  // namespace

Ball min_enclosing_ball(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("min_enclosing_ball: empty input");
  const int d = static_cast<int>(points.front().size());
  std::vector<const Point*> ptrs;
  ptrs.reserve(points.size());
  for (const Point& p : points) {
    if (p.size() != d) throw std::invalid_argument("min_enclosing_ball: dimension mismatch");
    ptrs.push_back(&p);
  }
  return miniball_of(std::move(ptrs), d);
}

Ball min_enclosing_ball(const Eigen::MatrixXd& coords, const std::vector<int>& indices) {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (int i : indices) {
    if (i < 0 || i >= coords.rows())
      throw std::out_of_range("min_enclosing_ball: index out of range");
    pts.push_back(coords.row(i).transpose());
  }
  return min_enclosing_ball(pts);
}

double cech_value(const Simplex& sigma, const Eigen::MatrixXd& coords) {
  if (sigma.empty()) throw std::invalid_argument("cech_value: empty simplex");
  for (VertexId v : sigma)
    if (v < 0 || v >= coords.rows()) throw std::out_of_range("cech_value: invalid vertex index");
  if (sigma.size() == 1) return 0.0;
  if (sigma.size() == 2)
    return 0.5 * (coords.row(sigma[0]) - coords.row(sigma[1])).norm();
  if (sigma.size() == 3) {
    // Closed form: either half the longest side or the circumradius.
    const Eigen::RowVectorXd a = coords.row(sigma[0]);
    const Eigen::RowVectorXd b = coords.row(sigma[1]);
    const Eigen::RowVectorXd c = coords.row(sigma[2]);
    double ab = (a - b).squaredNorm(), ac = (a - c).squaredNorm(), bc = (b - c).squaredNorm();
    const Eigen::RowVectorXd *p = &a, *q = &b, *r = &c;
    double longest = ab;
    if (ac > longest) { longest = ac; q = &c; r = &b; }
    if (bc > longest) { longest = bc; p = &b; q = &c; r = &a; }
    const Eigen::RowVectorXd mid = 0.5 * (*p + *q);
    if ((*r - mid).squaredNorm() <= 0.25 * longest * (1.0 + 1e-12))
      return 0.5 * std::sqrt(longest);
    // Acute triangle: circumradius via the Gram solve on the plane frame.
    Eigen::MatrixXd v(a.size(), 2);
    v.col(0) = (*q - *p).transpose();
    v.col(1) = (*r - *p).transpose();
    Eigen::Matrix2d g = v.transpose() * v;
    Eigen::Vector2d rhs = 0.5 * g.diagonal();
    Eigen::Vector2d x = g.fullPivLu().solve(rhs);
    return (v * x).norm();
  }
  return min_enclosing_ball(coords, sigma).radius;
}

double cech_value(const Simplex& sigma, const PointCloud& cloud) {
  return cech_value(sigma, cloud.coords());
}

bool convex_hull_contains(const Eigen::MatrixXd& pts,
                          const Eigen::Ref<const Eigen::VectorXd>& x, double tol) {
  const int n = static_cast<int>(pts.rows());
  const int d = static_cast<int>(pts.cols());
  if (x.size() != d) throw std::invalid_argument("convex_hull_contains: dimension mismatch");
  const int m = d + 1;  // equality rows: pts^T lambda = x, 1^T lambda = 1

  // Phase-1 simplex tableau with one artificial variable per row, Bland's rule.
  Eigen::MatrixXd a(m, n);
  a.topRows(d) = pts.transpose();
  a.row(d).setOnes();
  Eigen::VectorXd rhs(m);
  rhs.head(d) = x;
  rhs(d) = 1.0;
  double scale = 1.0 + rhs.cwiseAbs().maxCoeff();
  for (int r = 0; r < m; ++r)
    if (rhs(r) < 0) { a.row(r) = -a.row(r); rhs(r) = -rhs(r); }

  // Tableau columns: n structural + m artificial + rhs.
  Eigen::MatrixXd t(m + 1, n + m + 1);
  t.setZero();
  t.block(0, 0, m, n) = a;
  t.block(0, n, m, m).setIdentity();
  t.block(0, n + m, m, 1) = rhs;
  // Objective: minimize sum of artificials; expressed in terms of nonbasic columns.
  for (int c = 0; c <= n + m; ++c) t(m, c) = -t.block(0, c, m, 1).sum();
  for (int r = 0; r < m; ++r) t(m, n + r) = 0.0;

  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) basis[r] = n + r;

  const int max_iter = 200 * (n + m);
  for (int iter = 0; iter < max_iter; ++iter) {
    int pivot_col = -1;
    for (int c = 0; c < n + m; ++c)
      if (t(m, c) < -1e-12) { pivot_col = c; break; }  // Bland: first improving
    if (pivot_col < 0) break;
    int pivot_row = -1;
    double best = 0.0;
    for (int r = 0; r < m; ++r) {
      if (t(r, pivot_col) > 1e-12) {
        double ratio = t(r, n + m) / t(r, pivot_col);
        if (pivot_row < 0 || ratio < best - 1e-15 ||
            (std::abs(ratio - best) <= 1e-15 && basis[r] < basis[pivot_row])) {
          pivot_row = r;
          best = ratio;
        }
      }
    }
    if (pivot_row < 0) break;  // unbounded cannot happen in phase 1
    t.row(pivot_row) /= t(pivot_row, pivot_col);
    for (int r = 0; r <= m; ++r) {
      if (r == pivot_row) continue;
      double f = t(r, pivot_col);
      if (f != 0.0) t.row(r) -= f * t.row(pivot_row);
    }
    basis[pivot_row] = pivot_col;
  }
  double infeasibility = -t(m, n + m);
  return infeasibility <= tol * scale;
}

double distance_to_convex_hull(const Eigen::MatrixXd& pts,
                               const Eigen::Ref<const Eigen::VectorXd>& x) {
  const int n = static_cast<int>(pts.rows());
  const int d = static_cast<int>(pts.cols());
  if (x.size() != d) throw std::invalid_argument("distance_to_convex_hull: dimension mismatch");

  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) best = std::min(best, (pts.row(i).transpose() - x).norm());

  std::vector<int> subset;
  // Enumerate supports of size 2..d+1; project onto their affine hull and keep
  // candidates with nonnegative barycentric coordinates.
  std::function<void(int)> rec = [&](int start) {
    const int k = static_cast<int>(subset.size());
    if (k >= 2) {
      Eigen::MatrixXd v(d, k - 1);
      const Eigen::VectorXd q0 = pts.row(subset[0]).transpose();
      for (int c = 1; c < k; ++c) v.col(c - 1) = pts.row(subset[c]).transpose() - q0;
      Eigen::VectorXd w =
          v.completeOrthogonalDecomposition().solve((x - q0).eval());
      double w0 = 1.0 - w.sum();
      bool feasible = w0 >= -1e-12;
      for (int c = 0; c < k - 1 && feasible; ++c) feasible = w(c) >= -1e-12;
      if (feasible) best = std::min(best, (q0 + v * w - x).norm());
    }
    if (k == d + 1) return;
    for (int i = start; i < n; ++i) {
      subset.push_back(i);
      rec(i + 1);
      subset.pop_back();
    }
  };
  rec(0);
  return best;
}

}  // namespace cech
