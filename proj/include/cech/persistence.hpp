#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <vector>

#include "cech/diagram.hpp"
#include "cech/simplex_tree.hpp"

namespace cech {

using GenId = std::uint32_t;

/// Z2 annotation value: the sorted set of cohomology generator ids whose
/// coordinate is 1. Addition is symmetric difference.
struct AnnotationVector {
  std::vector<GenId> bits;

  bool zero() const { return bits.empty(); }
  bool test(GenId g) const { return std::binary_search(bits.begin(), bits.end(), g); }

  void xor_with(const AnnotationVector& other) {
    std::vector<GenId> out;
    out.reserve(bits.size() + other.bits.size());
    std::set_symmetric_difference(bits.begin(), bits.end(), other.bits.begin(),
                                  other.bits.end(), std::back_inserter(out));
    bits = std::move(out);
  }

  friend bool operator==(const AnnotationVector&, const AnnotationVector&) = default;
};

/// Union-find forest whose roots carry annotation values; every simplex holds
/// a pointer into it, and all simplices reaching one root are cohomologous.
/// A per-dimension registry keys each distinct live value to its unique root.
class AnnotationForest {
 public:
  struct Node {
    Node* parent = nullptr;
    AnnotationVector value;  // meaningful at roots only
    int dim = -1;
    long members = 0;  // simplex pointers reaching this root
  };

  Node* find(Node* n) {
    while (n->parent) {
      if (n->parent->parent) n->parent = n->parent->parent;  // path halving
      n = n->parent;
    }
    return n;
  }

  /// Root for (dim, value); creates and registers a fresh class if absent.
  Node* class_for(int dim, AnnotationVector value);

  void add_member(Node* any) {
    ++find(any)->members;
  }
  void remove_member(Node* any) {
    Node* r = find(any);
    if (--r->members == 0) unregister(r);
  }

  const AnnotationVector& value_of(Node* any) { return find(any)->value; }

  /// Live roots of the given dimension whose value contains bit u.
  std::vector<Node*> roots_with_bit(int dim, GenId u);

  /// Re-registers a root after its value changed in place; if the new value
  /// collides with another live class the two are unioned (the registered
  /// root wins). Caller must have unregistered the root first.
  void reinsert(Node* root);

  void unregister(Node* root);

  std::size_t live_classes(int dim) const;

 private:
  using Registry = std::map<std::vector<GenId>, Node*>;
  Registry& registry(int dim);

  std::deque<Node> pool_;
  std::vector<Registry> registries_;  // by dimension
};

struct GeneratorInfo {
  int dim = 0;
  double birth = 0.0;
  std::uint64_t seq = 0;  // creation counter; larger = younger at equal birth
  bool alive = false;
};

struct EngineEvent {
  enum class Kind { None, Birth, Death };
  Kind kind = Kind::None;
  int dim = 0;
  GenId gen = 0;
  double scale = 0.0;
};

/// Annotation-based persistence over a sequence of simplex additions and edge
/// contractions. Owns the simplex tree, the annotation forest, the generator
/// registry and the interval recorder; one mutable unit, single writer.
class PersistenceEngine {
 public:
  PersistenceEngine() = default;

  /// Adds one simplex at scale t. All proper faces must be present. Returns
  /// Birth(p, g) when the boundary annotation vanishes, else Death(p-1, g)
  /// of the youngest generator hit by the boundary.
  EngineEvent add_simplex(const Simplex& sigma, double t);

  /// Adds sigma together with any missing faces, faces first, all at scale t.
  /// One event per simplex actually added.
  std::vector<EngineEvent> add_closure(const Simplex& sigma, double t);

  /// Contracts [a,b] -> [a] at scale t. Repairs the link condition first by
  /// inserting the deficiency cofaces (smallest first, all at scale t), then
  /// transfers annotations over the mirror-bearing simplices and rewrites the
  /// tree. Returns the events generated by the repair inclusions.
  std::vector<EngineEvent> contract_edge(VertexId a, VertexId b, double t);

  int betti(int p) const;

  /// Emits finished intervals of positive length plus one (dim, birth, inf)
  /// per live generator.
  PersistenceDiagram finalize(double alpha_max) const;

  const SimplexTree& complex() const { return tree_; }
  bool contains(const Simplex& s) const { return tree_.contains(s); }

  AnnotationVector annotation(const Simplex& s);

  const std::vector<GeneratorInfo>& generators() const { return gens_; }
  const std::vector<Interval>& recorded() const { return finished_; }

  /// Invoked after every completed engine event (each simplex addition,
  /// including contraction repairs, and each contraction).
  void set_observer(std::function<void(const PersistenceEngine&, const EngineEvent&)> obs) {
    observer_ = std::move(obs);
  }

  /// Extra internal checks: mirror-annotation agreement and Betti
  /// preservation across link-condition contractions.
  void set_validation(bool on) { validate_ = on; }

  double last_scale() const { return last_scale_; }

 private:
  using FNode = AnnotationForest::Node;
  FNode* handle(SimplexTree::Node* n) { return static_cast<FNode*>(n->annotation); }
  void attach(SimplexTree::Node* n, FNode* cls);
  void repoint(SimplexTree::Node* n, int dim, AnnotationVector value);
  GenId new_generator(int dim, double birth);
  GenId youngest(const std::vector<GenId>& ids) const;
  void check_scale(double t);

  SimplexTree tree_;
  AnnotationForest forest_;
  std::vector<GeneratorInfo> gens_;
  std::vector<std::size_t> live_per_dim_;
  std::vector<Interval> finished_;  // zero-length intervals kept here, filtered on output
  std::function<void(const PersistenceEngine&, const EngineEvent&)> observer_;
  bool validate_ = false;
  double last_scale_ = 0.0;
  bool any_event_ = false;
};

}  // namespace cech
