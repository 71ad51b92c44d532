#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cech/clustering.hpp"
#include "test_support.hpp"

using namespace cech;

namespace {

PointCloud cloud1d(std::initializer_list<double> xs) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(xs.size()), 1);
  Eigen::Index i = 0;
  for (double x : xs) m(i++, 0) = x;
  return PointCloud(m);
}

// Recomputes every merge from the definition: linkage distance between two
// clusters is the max pairwise point distance; no Lance-Williams shortcut.
Dendrogram brute_complete_linkage(const PointCloud& cloud) {
  const int n = cloud.size();
  Dendrogram out;
  out.n = n;
  std::map<int, std::vector<int>> clusters;
  for (int i = 0; i < n; ++i) clusters[i] = {i};
  while (clusters.size() > 1) {
    double best = std::numeric_limits<double>::infinity();
    int bi = -1, bj = -1;
    for (auto it = clusters.begin(); it != clusters.end(); ++it)
      for (auto jt = std::next(it); jt != clusters.end(); ++jt) {
        double link = 0.0;
        for (int p : it->second)
          for (int q : jt->second)
            link = std::max(link, (cloud.coords().row(p) - cloud.coords().row(q)).norm());
        if (link < best) {
          best = link;
          bi = it->first;
          bj = jt->first;
        }
      }
    auto& dst = clusters[bi];
    for (int q : clusters[bj]) dst.push_back(q);
    clusters.erase(bj);
    out.events.push_back(LinkageEvent{best, bi, bj});
  }
  return out;
}

}  // namespace

TEST_CASE("two points merge at their distance") {
  const auto d = complete_linkage(cloud1d({0.0, 3.5}));
  REQUIRE(d.events.size() == 1);
  CHECK(d.events[0].scale == doctest::Approx(3.5));
  CHECK(d.events[0].i == 0);
  CHECK(d.events[0].j == 1);
}

TEST_CASE("three collinear points use the max linkage") {
  const auto d = complete_linkage(cloud1d({0.0, 1.0, 3.0}));
  REQUIRE(d.events.size() == 2);
  CHECK(d.events[0].scale == doctest::Approx(1.0));
  CHECK(d.events[0].i == 0);
  CHECK(d.events[0].j == 1);
  // Complete linkage: max(3, 2) = 3.
  CHECK(d.events[1].scale == doctest::Approx(3.0));
  CHECK(d.events[1].i == 0);
  CHECK(d.events[1].j == 2);
}

TEST_CASE("structure: n-1 events, nondecreasing scales, i < j") {
  Rng rng(61);
  const PointCloud cloud = testing::random_cloud(rng, 17, 3);
  const auto d = complete_linkage(cloud);
  CHECK(d.n == 17);
  REQUIRE(d.events.size() == 16);
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    CHECK(d.events[k].i < d.events[k].j);
    if (k) CHECK(d.events[k].scale >= d.events[k - 1].scale);
  }
  // Single point: no events.
  CHECK(complete_linkage(cloud1d({1.0})).events.empty());
}

TEST_CASE("matches the brute-force recomputation on random clouds") {
  Rng rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    const PointCloud cloud = testing::random_cloud(rng, 2 + static_cast<int>(rng.index(9)), 2);
    const auto fast = complete_linkage(cloud);
    const auto slow = brute_complete_linkage(cloud);
    REQUIRE(fast.events.size() == slow.events.size());
    for (std::size_t k = 0; k < fast.events.size(); ++k) {
      CHECK(fast.events[k].scale == doctest::Approx(slow.events[k].scale).epsilon(1e-12));
      CHECK(fast.events[k].i == slow.events[k].i);
      CHECK(fast.events[k].j == slow.events[k].j);
    }
  }
}

TEST_CASE("advance: representative follows the member centroid") {
  // Singleton merge: centroid (1,0), both members distance 1; index tie keeps 0.
  {
    Eigen::MatrixXd m(2, 2);
    m << 0, 0, 2, 0;
    PointCloud cloud{m};
    ClusterState state(2);
    const auto c = state.advance(LinkageEvent{2.0, 0, 1}, cloud);
    CHECK(c.keep == 0);
    CHECK(c.drop == 1);
    CHECK(state.representative(0) == 0);
    CHECK(state.level() == 1);
  }
  // Merging {(0,0),(1,0)} with {(2,0)}: centroid (1,0) picks point 1.
  {
    Eigen::MatrixXd m(3, 2);
    m << 0, 0, 1, 0, 2, 0;
    PointCloud cloud{m};
    ClusterState state(3);
    state.advance(LinkageEvent{1.0, 0, 1}, cloud);
    state.advance(LinkageEvent{2.0, 0, 2}, cloud);
    CHECK(state.representative(0) == 1);
    CHECK(state.live().size() == 1);
  }
}

TEST_CASE("advance errors on dead clusters") {
  Eigen::MatrixXd m(3, 1);
  m << 0, 1, 2;
  PointCloud cloud{m};
  ClusterState state(3);
  state.advance(LinkageEvent{1.0, 0, 1}, cloud);
  CHECK_THROWS_AS(state.advance(LinkageEvent{2.0, 1, 2}, cloud), std::invalid_argument);
}

TEST_CASE("partition invariant and representative membership") {
  Rng rng(71);
  const PointCloud cloud = testing::random_cloud(rng, 12, 2);
  const auto dendro = complete_linkage(cloud);
  ClusterState state(cloud.size());
  for (const auto& event : dendro.events) {
    const auto c = state.advance(event, cloud);
    // Singleton merges keep one of the two original points.
    std::set<int> all;
    for (const auto& [idx, cluster] : state.live()) {
      CHECK(std::binary_search(cluster.members.begin(), cluster.members.end(),
                               cluster.representative));
      for (int mpt : cluster.members) CHECK(all.insert(mpt).second);
    }
    CHECK(all.size() == static_cast<std::size_t>(cloud.size()));
    CHECK(c.keep == event.i);
    CHECK(c.drop == event.j);
  }
  CHECK(state.live().size() == 1);
}
