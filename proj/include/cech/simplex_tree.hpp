#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cech/simplex.hpp"

namespace cech {

/// Trie over sorted vertex labels storing a simplicial complex, augmented with
/// cousin cycles linking equal-label equal-depth nodes. Single writer; no
/// queries during mutation.
class SimplexTree {
 public:
  struct Node {
    VertexId label = -1;  // root carries -1
    int depth = 0;        // root has depth 0; depth = dim + 1
    Node* parent = nullptr;
    std::map<VertexId, std::unique_ptr<Node>> children;
    Node* cousin = nullptr;     // next node with same (label, depth); cyclic
    void* annotation = nullptr;  // association owned by the persistence engine
  };

  SimplexTree();

  /// Inserts sigma and every missing face. Returns the simplices actually
  /// added, in dimension-then-lexicographic order.
  std::vector<Simplex> insert_closed(const Simplex& sigma);

  /// Inserts exactly sigma; all proper faces must already be present.
  Node* insert_one(const Simplex& sigma);

  bool contains(const Simplex& sigma) const { return find(sigma) != nullptr; }
  Node* find(const Simplex& sigma) const;

  /// All proper faces of sigma, dimension-then-lexicographic.
  std::vector<Simplex> faces(const Simplex& sigma) const;

  /// All simplices tau >= sigma, including sigma itself, found by walking the
  /// cousin cycles of sigma's largest label at depths >= |sigma|.
  std::vector<Simplex> cofaces(const Simplex& sigma) const;

  /// lk(sigma) = { tau \ sigma : sigma <= tau }, without the empty set.
  std::vector<Simplex> link(const Simplex& sigma) const;

  /// L(a,b) = (lk[a] cap lk[b]) \ lk[a,b], dimension-then-lexicographic.
  /// Empty iff [a,b] satisfies the link condition.
  std::vector<Simplex> link_deficiency(VertexId a, VertexId b) const;

  struct ContractReport {
    std::vector<std::pair<Simplex, Simplex>> mirror_pairs;  // equal image, each pair once
    std::vector<Simplex> removed;  // every simplex containing b
    std::vector<Simplex> added;    // relabeled images that were not present
  };

  /// Edge contraction [a,b] -> [a]; requires the link condition. Every
  /// simplex containing b is removed and its image inserted if absent.
  ContractReport structural_contract(VertexId a, VertexId b);

  std::size_t simplex_count() const { return count_; }
  std::vector<Simplex> all_simplices() const;  // dimension-then-lexicographic

  /// Debug dump: one simplex per line, comma-separated labels, dim-then-lex.
  std::string dump() const;

  int depth_bound() const { return depth_bound_; }

  /// Visits every node in the cousin cycle for (label, depth). Returns the
  /// number of nodes visited (0 when the cycle is absent).
  template <typename F>
  std::size_t for_each_cousin(VertexId label, int depth, F&& f) const {
    auto it = cousin_reps_.find({label, depth});
    if (it == cousin_reps_.end()) return 0;
    std::size_t n = 0;
    Node* start = it->second;
    Node* cur = start;
    do {
      f(cur);
      ++n;
      cur = cur->cousin;
    } while (cur != start);
    return n;
  }

  Simplex simplex_of(const Node* n) const;

 private:
  void link_cousin(Node* n);
  void unlink_cousin(Node* n);
  void remove_subtree(Node* n);  // unlinks and erases n and its descendants
  void collect_subtree(const Node* n, std::vector<Simplex>& out) const;

  std::unique_ptr<Node> root_;
  std::map<std::pair<VertexId, int>, Node*> cousin_reps_;
  std::size_t count_ = 0;
  int depth_bound_ = 0;  // upper bound on node depth (not shrunk on removal)
};

/// Image of sigma under the edge contraction [a,b] -> [a] (Definition of an
/// edge contraction, case analysis on membership of a and b).
Simplex contract_image(const Simplex& sigma, VertexId a, VertexId b);

}  // namespace cech
