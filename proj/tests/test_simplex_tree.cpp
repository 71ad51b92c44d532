#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "cech/rng.hpp"
#include "cech/simplex_tree.hpp"
#include "test_support.hpp"

using namespace cech;

namespace {

std::set<Simplex> as_set(const std::vector<Simplex>& v) { return {v.begin(), v.end()}; }

SimplexTree tree_of(const std::vector<Simplex>& simplices) {
  SimplexTree tree;
  for (const Simplex& s : simplices) tree.insert_closed(s);
  return tree;
}

// Walks every cousin cycle and checks it visits exactly the nodes with that
// (label, depth), each once.
void check_cousin_cycles(const SimplexTree& tree) {
  std::map<std::pair<VertexId, int>, std::size_t> expected;
  for (const Simplex& s : tree.all_simplices())
    ++expected[{s.back(), static_cast<int>(s.size())}];
  std::size_t total = 0;
  for (const auto& [key, want] : expected) {
    std::set<const SimplexTree::Node*> seen;
    const std::size_t visited = tree.for_each_cousin(
        key.first, key.second, [&](SimplexTree::Node* n) {
          CHECK(n->label == key.first);
          CHECK(n->depth == key.second);
          seen.insert(n);
        });
    CHECK(visited == want);
    CHECK(seen.size() == want);
    total += visited;
  }
  CHECK(total == tree.simplex_count());
}

void check_downward_closed(const SimplexTree& tree) {
  for (const Simplex& s : tree.all_simplices())
    for (const Simplex& f : tree.faces(s)) CHECK(tree.contains(f));
}

}  // namespace

TEST_CASE("insert_closed of a triangle") {
  SimplexTree tree;
  const auto added = tree.insert_closed({1, 2, 3});
  const std::vector<Simplex> want{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  CHECK(added == want);
  CHECK(tree.simplex_count() == 7);

  CHECK(tree.insert_closed({1, 2}).empty());

  const auto more = tree.insert_closed({1, 2, 4});
  const std::vector<Simplex> want_more{{4}, {1, 4}, {2, 4}, {1, 2, 4}};
  CHECK(more == want_more);
  CHECK(tree.simplex_count() == 11);
  check_cousin_cycles(tree);
  check_downward_closed(tree);
}

TEST_CASE("contains, faces, cofaces") {
  SimplexTree tree = tree_of({{1, 2, 3}});
  CHECK(tree.contains({1, 2}));
  CHECK_FALSE(tree.contains({5}));

  CHECK(as_set(tree.cofaces({1, 2})) == as_set({{1, 2}, {1, 2, 3}}));
  CHECK(as_set(tree.cofaces({3})) == as_set({{3}, {1, 3}, {2, 3}, {1, 2, 3}}));
  CHECK(tree.faces({1, 2, 3}) ==
        std::vector<Simplex>{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("link") {
  SimplexTree closed = tree_of({{1, 2, 3}});
  CHECK(as_set(closed.link({1})) == as_set({{2}, {3}, {2, 3}}));
  CHECK(closed.link({1, 2}) == std::vector<Simplex>{{3}});

  SimplexTree boundary = tree_of({{1, 2}, {1, 3}, {2, 3}});
  CHECK(boundary.link({1, 2}).empty());
  CHECK_THROWS_AS(boundary.link({4}), std::invalid_argument);
}

TEST_CASE("link deficiency") {
  SimplexTree closed = tree_of({{1, 2, 3}});
  CHECK(closed.link_deficiency(1, 2).empty());

  SimplexTree boundary = tree_of({{1, 2}, {1, 3}, {2, 3}});
  CHECK(boundary.link_deficiency(1, 2) == std::vector<Simplex>{{3}});

  CHECK_THROWS_AS(boundary.link_deficiency(1, 4), std::invalid_argument);
}

TEST_CASE("the example complex forces [1,2,5] before contracting [1,2]") {
  // Edges and triangles inserted in the order of the worked example.
  SimplexTree tree = tree_of(
      {{1, 5}, {4, 5}, {2, 5}, {3, 5}, {1, 4}, {2, 3}, {1, 4, 5}, {2, 3, 5}, {3, 4}, {1, 2}});
  CHECK(tree.link_deficiency(1, 2) == std::vector<Simplex>{{5}});
  // Repairing with [1,2,5] closes the deficiency.
  tree.insert_closed({1, 2, 5});
  CHECK(tree.link_deficiency(1, 2).empty());
}

TEST_CASE("structural contract: closed triangle to closed edge") {
  SimplexTree tree = tree_of({{1, 2, 3}});
  const auto report = tree.structural_contract(1, 2);
  CHECK(tree.all_simplices() == std::vector<Simplex>{{1}, {3}, {1, 3}});
  CHECK(tree.simplex_count() == 3);
  // Merge classes {[1],[2],[1,2]} and {[1,3],[2,3],[1,2,3]}.
  const std::set<std::pair<Simplex, Simplex>> pairs(report.mirror_pairs.begin(),
                                                    report.mirror_pairs.end());
  CHECK(pairs.count({{1}, {2}}));
  CHECK(pairs.count({{1}, {1, 2}}));
  CHECK(pairs.count({{1, 3}, {2, 3}}));
  CHECK(pairs.count({{1, 3}, {1, 2, 3}}));
  CHECK(report.mirror_pairs.size() == 6);
  CHECK(report.added.empty());
  check_cousin_cycles(tree);
}

TEST_CASE("structural contract: path relabels the far edge") {
  SimplexTree tree = tree_of({{1, 2}, {2, 3}});
  const auto report = tree.structural_contract(1, 2);
  CHECK(tree.all_simplices() == std::vector<Simplex>{{1}, {3}, {1, 3}});
  CHECK(report.added == std::vector<Simplex>{{1, 3}});
  check_cousin_cycles(tree);
  check_downward_closed(tree);
}

TEST_CASE("structural contract: isolated edge to a vertex") {
  SimplexTree tree = tree_of({{1, 2}});
  tree.structural_contract(1, 2);
  CHECK(tree.all_simplices() == std::vector<Simplex>{{1}});
}

TEST_CASE("structural contract rejects deficient edges") {
  SimplexTree boundary = tree_of({{1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(boundary.structural_contract(1, 2), std::invalid_argument);
  SimplexTree no_edge = tree_of({{1}, {2}});
  CHECK_THROWS_AS(no_edge.structural_contract(1, 2), std::invalid_argument);
}

TEST_CASE("lemma: lk[a,b] is contained in lk[a] cap lk[b]") {
  Rng rng(21);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto complex = testing::random_flag_complex(rng, 7, 0.5, 3);
    SimplexTree tree;
    for (const Simplex& s : complex) tree.insert_closed(s);
    for (const Simplex& s : complex) {
      if (s.size() != 2) continue;
      const auto la = as_set(tree.link({s[0]}));
      const auto lb = as_set(tree.link({s[1]}));
      for (const Simplex& eta : tree.link(s)) {
        CHECK(la.count(eta));
        CHECK(lb.count(eta));
      }
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("lemma: inserting a deficiency element shrinks the deficiency by exactly it") {
  Rng rng(22);
  int exercised = 0;
  for (int trial = 0; trial < 200 && exercised < 60; ++trial) {
    const auto complex = testing::random_complex(rng, 8, 6, 4);
    SimplexTree tree;
    for (const Simplex& s : complex) tree.insert_closed(s);
    for (const Simplex& s : complex) {
      if (s.size() != 2) continue;
      auto deficiency = tree.link_deficiency(s[0], s[1]);
      if (deficiency.empty()) continue;
      const std::size_t k = deficiency.size();
      // The smallest element's faces are all present, so adding the single
      // simplex eta + [a,b] is legal and removes exactly eta.
      const Simplex eta = deficiency.front();
      SimplexTree copy;
      for (const Simplex& t : tree.all_simplices()) copy.insert_closed(t);
      copy.insert_one(simplex_with(simplex_with(eta, s[0]), s[1]));
      auto after = copy.link_deficiency(s[0], s[1]);
      CHECK(after.size() == k - 1);
      for (const Simplex& e : after) CHECK(e != eta);
      // A non-minimal element inserted closed removes at least itself.
      const Simplex any = deficiency[rng.index(deficiency.size())];
      SimplexTree copy2;
      for (const Simplex& t : tree.all_simplices()) copy2.insert_closed(t);
      copy2.insert_closed(simplex_with(simplex_with(any, s[0]), s[1]));
      auto after2 = copy2.link_deficiency(s[0], s[1]);
      CHECK(after2.size() <= k - 1);
      for (const Simplex& e : after2) CHECK(e != any);
      ++exercised;
      break;
    }
  }
  CHECK(exercised >= 30);
}

TEST_CASE("contract image matches brute-force application of the definition") {
  Rng rng(23);
  int exercised = 0;
  for (int trial = 0; trial < 300 && exercised < 50; ++trial) {
    const auto complex = testing::random_flag_complex(rng, 7, 0.5, 3);
    SimplexTree tree;
    for (const Simplex& s : complex) tree.insert_closed(s);
    // Pick a present edge satisfying the link condition.
    Simplex edge;
    for (const Simplex& s : complex) {
      if (s.size() == 2 && tree.link_deficiency(s[0], s[1]).empty()) {
        edge = s;
        break;
      }
    }
    if (edge.empty()) continue;
    std::set<Simplex> expected;
    for (const Simplex& s : complex) expected.insert(contract_image(s, edge[0], edge[1]));
    tree.structural_contract(edge[0], edge[1]);
    CHECK(as_set(tree.all_simplices()) == expected);
    check_downward_closed(tree);
    check_cousin_cycles(tree);
    ++exercised;
  }
  CHECK(exercised >= 30);
}

TEST_CASE("debug dump format") {
  SimplexTree tree = tree_of({{2, 5}, {1}});
  CHECK(tree.dump() == "1\n2\n5\n2,5\n");
}
