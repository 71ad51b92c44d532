#include "cech/clustering.hpp"

#include <limits>
#include <stdexcept>

namespace cech {

Dendrogram complete_linkage(const PointCloud& cloud) {
  const int n = cloud.size();
  Dendrogram dendro;
  dendro.n = n;
  if (n == 1) return dendro;

  // Pairwise distances double as the initial cluster-linkage matrix; the
  // complete-linkage update D[i][k] = max(D[i][k], D[j][k]) is exact.
  Eigen::MatrixXd dist(n, n);
  dist.setZero();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = (cloud.coords().row(i) - cloud.coords().row(j)).norm();
      dist(i, j) = d;
      dist(j, i) = d;
    }

  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  for (int step = 0; step < n - 1; ++step) {
    int bi = -1, bj = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (int j = i + 1; j < n; ++j) {
        if (!alive[j]) continue;
        if (dist(i, j) < best) {
          best = dist(i, j);
          bi = i;
          bj = j;
        }
      }
    }
    dendro.events.push_back(LinkageEvent{best, bi, bj});
    alive[static_cast<std::size_t>(bj)] = false;
    for (int k = 0; k < n; ++k) {
      if (!alive[k] || k == bi) continue;
      const double d = std::max(dist(bi, k), dist(bj, k));
      dist(bi, k) = d;
      dist(k, bi) = d;
    }
  }
  return dendro;
}

ClusterState::ClusterState(int n) {
  if (n < 1) throw std::invalid_argument("ClusterState: need at least one cluster");
  for (int i = 0; i < n; ++i) live_[i] = Cluster{i, {i}};
}

ClusterState::Contraction ClusterState::advance(const LinkageEvent& event,
                                                const PointCloud& cloud) {
  auto it_i = live_.find(event.i);
  auto it_j = live_.find(event.j);
  if (it_i == live_.end() || it_j == live_.end())
    throw std::invalid_argument("ClusterState::advance: dead cluster index");

  Cluster& ci = it_i->second;
  Cluster& cj = it_j->second;
  std::vector<int> merged;
  merged.reserve(ci.members.size() + cj.members.size());
  std::merge(ci.members.begin(), ci.members.end(), cj.members.begin(), cj.members.end(),
             std::back_inserter(merged));

  Eigen::RowVectorXd centroid = Eigen::RowVectorXd::Zero(cloud.dim());
  for (int m : merged) centroid += cloud.coords().row(m);
  centroid /= static_cast<double>(merged.size());

  int rep = merged.front();
  double best = (cloud.coords().row(rep) - centroid).squaredNorm();
  for (int m : merged) {
    const double d = (cloud.coords().row(m) - centroid).squaredNorm();
    if (d < best) {
      best = d;
      rep = m;  // members are ascending, so ties keep the smallest index
    }
  }

  ci.members = std::move(merged);
  ci.representative = rep;
  live_.erase(it_j);
  ++level_;
  return Contraction{event.i, event.j};
}

int ClusterState::representative(int cluster) const {
  auto it = live_.find(cluster);
  if (it == live_.end()) throw std::invalid_argument("ClusterState: dead cluster index");
  return it->second.representative;
}

}  // namespace cech
