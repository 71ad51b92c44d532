#include "cech/persistence.hpp"

#include <algorithm>
#include <stdexcept>

namespace cech {

AnnotationForest::Registry& AnnotationForest::registry(int dim) {
  if (dim < 0) throw std::logic_error("AnnotationForest: negative dimension");
  if (static_cast<std::size_t>(dim) >= registries_.size())
    registries_.resize(static_cast<std::size_t>(dim) + 1);
  return registries_[static_cast<std::size_t>(dim)];
}

AnnotationForest::Node* AnnotationForest::class_for(int dim, AnnotationVector value) {
  Registry& reg = registry(dim);
  auto it = reg.find(value.bits);
  if (it != reg.end()) return it->second;
  pool_.emplace_back();
  Node* n = &pool_.back();
  n->dim = dim;
  n->value = std::move(value);
  reg.emplace(n->value.bits, n);
  return n;
}

std::vector<AnnotationForest::Node*> AnnotationForest::roots_with_bit(int dim, GenId u) {
  std::vector<Node*> out;
  for (auto& [bits, root] : registry(dim))
    if (std::binary_search(bits.begin(), bits.end(), u)) out.push_back(root);
  return out;
}

void AnnotationForest::unregister(Node* root) {
  Registry& reg = registry(root->dim);
  auto it = reg.find(root->value.bits);
  if (it != reg.end() && it->second == root) reg.erase(it);
}

void AnnotationForest::reinsert(Node* root) {
  Registry& reg = registry(root->dim);
  auto [it, inserted] = reg.emplace(root->value.bits, root);
  if (!inserted) {
    // Value collision: the classes are cohomologous, union them.
    Node* keeper = it->second;
    root->parent = keeper;
    keeper->members += root->members;
    root->members = 0;
    root->value.bits.clear();
  }
}

std::size_t AnnotationForest::live_classes(int dim) const {
  if (dim < 0 || static_cast<std::size_t>(dim) >= registries_.size()) return 0;
  return registries_[static_cast<std::size_t>(dim)].size();
}

void PersistenceEngine::attach(SimplexTree::Node* n, FNode* cls) {
  n->annotation = cls;
  forest_.add_member(cls);
}

void PersistenceEngine::repoint(SimplexTree::Node* n, int dim, AnnotationVector value) {
  FNode* cls = forest_.class_for(dim, std::move(value));
  forest_.add_member(cls);
  forest_.remove_member(handle(n));
  n->annotation = cls;
}

GenId PersistenceEngine::new_generator(int dim, double birth) {
  const GenId id = static_cast<GenId>(gens_.size());
  gens_.push_back(GeneratorInfo{dim, birth, static_cast<std::uint64_t>(id), true});
  if (static_cast<std::size_t>(dim) >= live_per_dim_.size())
    live_per_dim_.resize(static_cast<std::size_t>(dim) + 1, 0);
  ++live_per_dim_[static_cast<std::size_t>(dim)];
  return id;
}

GenId PersistenceEngine::youngest(const std::vector<GenId>& ids) const {
  GenId best = ids.front();
  for (GenId g : ids) {
    const GeneratorInfo &a = gens_[g], &b = gens_[best];
    if (a.birth > b.birth || (a.birth == b.birth && a.seq > b.seq)) best = g;
  }
  return best;
}

void PersistenceEngine::check_scale(double t) {
  if (any_event_ && t < last_scale_)
    throw std::logic_error("PersistenceEngine: event scales must be nondecreasing");
  last_scale_ = t;
  any_event_ = true;
}

EngineEvent PersistenceEngine::add_simplex(const Simplex& sigma, double t) {
  if (!simplex_valid(sigma)) throw std::invalid_argument("add_simplex: invalid simplex");
  if (tree_.contains(sigma)) throw std::invalid_argument("add_simplex: simplex already present");
  check_scale(t);
  const int p = simplex_dim(sigma);

  AnnotationVector boundary;
  if (p > 0) {
    for (std::size_t skip = 0; skip < sigma.size(); ++skip) {
      Simplex facet;
      facet.reserve(sigma.size() - 1);
      for (std::size_t k = 0; k < sigma.size(); ++k)
        if (k != skip) facet.push_back(sigma[k]);
      SimplexTree::Node* fn = tree_.find(facet);
      if (!fn)
        throw std::invalid_argument("add_simplex: missing face " + simplex_to_string(facet));
      boundary.xor_with(forest_.value_of(handle(fn)));
    }
  }

  SimplexTree::Node* node = tree_.insert_one(sigma);
  EngineEvent event;
  event.scale = t;

  if (boundary.zero()) {
    // Case 1a: a p-dimensional class is born; sigma is annotated by the new
    // generator alone.
    const GenId g = new_generator(p, t);
    attach(node, forest_.class_for(p, AnnotationVector{{g}}));
    event.kind = EngineEvent::Kind::Birth;
    event.dim = p;
    event.gen = g;
  } else {
    // Case 1b: sigma kills the youngest class its boundary touches. Every
    // (p-1)-class whose value contains u is shifted by the boundary value,
    // which clears component u everywhere.
    const GenId u = youngest(boundary.bits);
    finished_.push_back(Interval{p - 1, gens_[u].birth, t});
    auto roots = forest_.roots_with_bit(p - 1, u);
    for (FNode* r : roots) forest_.unregister(r);
    for (FNode* r : roots) r->value.xor_with(boundary);
    for (FNode* r : roots) forest_.reinsert(r);
    gens_[u].alive = false;
    --live_per_dim_[static_cast<std::size_t>(p - 1)];
    attach(node, forest_.class_for(p, AnnotationVector{}));
    event.kind = EngineEvent::Kind::Death;
    event.dim = p - 1;
    event.gen = u;
  }
  if (observer_) observer_(*this, event);
  return event;
}

std::vector<EngineEvent> PersistenceEngine::add_closure(const Simplex& sigma, double t) {
  if (!simplex_valid(sigma)) throw std::invalid_argument("add_closure: invalid simplex");
  std::vector<Simplex> subsets;
  const std::size_t k = sigma.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
    Simplex s;
    for (std::size_t b = 0; b < k; ++b)
      if (mask & (std::size_t(1) << b)) s.push_back(sigma[b]);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), SimplexOrder{});
  std::vector<EngineEvent> events;
  for (const Simplex& s : subsets)
    if (!tree_.contains(s)) events.push_back(add_simplex(s, t));
  return events;
}

std::vector<EngineEvent> PersistenceEngine::contract_edge(VertexId a, VertexId b, double t) {
  const Simplex edge{std::min(a, b), std::max(a, b)};
  if (!tree_.contains(edge)) throw std::invalid_argument("contract_edge: edge not present");
  check_scale(t);

  std::vector<EngineEvent> events;
  // Case 2b: repair the link condition, smallest deficiency element first;
  // every inclusion is attributed to the contraction scale.
  std::size_t prev_deficiency = 0;
  bool first = true;
  for (;;) {
    const auto deficiency = tree_.link_deficiency(a, b);
    if (!first && validate_ && deficiency.size() != prev_deficiency - 1)
      throw std::logic_error("contract_edge: deficiency did not shrink by one");
    if (deficiency.empty()) break;
    prev_deficiency = deficiency.size();
    first = false;
    Simplex repair = simplex_with(simplex_with(deficiency.front(), a), b);
    events.push_back(add_simplex(repair, t));
  }

  std::vector<std::size_t> live_before;
  if (validate_) {
    live_before = live_per_dim_;
  }

  // Case 2a: annotation transfer. M holds the mirror-bearing simplices
  // containing a; g_tau = tau + {b} is the unique p-coface of tau containing
  // the edge. All g values are snapshotted before any update.
  struct MEntry {
    Simplex tau;
    AnnotationVector g_value;
  };
  std::vector<MEntry> transfer;
  for (const Simplex& tau : tree_.cofaces(Simplex{a})) {
    if (simplex_has(tau, b)) continue;
    const Simplex g = simplex_with(tau, b);
    SimplexTree::Node* gn = tree_.find(g);
    if (gn) transfer.push_back(MEntry{tau, forest_.value_of(handle(gn))});
  }

  std::map<Simplex, AnnotationVector, SimplexOrder> delta;
  for (const MEntry& m : transfer) {
    if (m.g_value.zero()) continue;
    const int p = simplex_dim(m.tau) + 1;
    for (const Simplex& sigma : tree_.cofaces(m.tau)) {
      if (simplex_dim(sigma) != p || simplex_has(sigma, b)) continue;
      delta[sigma].xor_with(m.g_value);
    }
  }
  for (auto& [sigma, dv] : delta) {
    if (dv.zero()) continue;
    SimplexTree::Node* n = tree_.find(sigma);
    AnnotationVector value = forest_.value_of(handle(n));
    value.xor_with(dv);
    repoint(n, simplex_dim(sigma), std::move(value));
  }

  if (validate_) {
    // Mirror simplices must agree after the transfer; they map to one simplex.
    for (const MEntry& m : transfer) {
      const Simplex mirror = simplex_with(simplex_without(m.tau, a), b);
      SimplexTree::Node* mn = tree_.find(mirror);
      if (!mn) throw std::logic_error("contract_edge: missing mirror simplex");
      if (!(forest_.value_of(handle(mn)) == forest_.value_of(handle(tree_.find(m.tau)))))
        throw std::logic_error("contract_edge: mirror annotations disagree after transfer");
    }
  }

  // Rewrite the tree. Relabeled simplices (image not previously present) keep
  // their class; merged ones drop their handle, the surviving image already
  // carries the common value.
  std::vector<std::pair<Simplex, FNode*>> carry;
  std::vector<FNode*> releases;
  for (const Simplex& s : tree_.cofaces(Simplex{b})) {
    SimplexTree::Node* n = tree_.find(s);
    FNode* h = handle(n);
    const Simplex image = contract_image(s, a, b);
    if (!tree_.contains(image)) carry.emplace_back(image, h);
    releases.push_back(h);
  }

  const auto report = tree_.structural_contract(a, b);
  for (const auto& [image, cls] : carry) {
    SimplexTree::Node* n = tree_.find(image);
    if (!n) throw std::logic_error("contract_edge: relabeled image missing after contraction");
    attach(n, cls);
  }
  for (FNode* h : releases) forest_.remove_member(h);

  if (validate_) {
    if (live_per_dim_ != live_before)
      throw std::logic_error("contract_edge: Betti numbers changed by a link-condition contraction");
    (void)report;
  }

  EngineEvent done;
  done.kind = EngineEvent::Kind::None;
  done.scale = t;
  if (observer_) observer_(*this, done);
  return events;
}

int PersistenceEngine::betti(int p) const {
  if (p < 0 || static_cast<std::size_t>(p) >= live_per_dim_.size()) return 0;
  return static_cast<int>(live_per_dim_[static_cast<std::size_t>(p)]);
}

PersistenceDiagram PersistenceEngine::finalize(double) const {
  PersistenceDiagram out;
  for (const Interval& iv : finished_)
    if (iv.death > iv.birth) out.intervals.push_back(iv);
  for (const GeneratorInfo& g : gens_)
    if (g.alive) out.intervals.push_back(Interval{g.dim, g.birth, kInfDeath});
  out.sort();
  return out;
}

AnnotationVector PersistenceEngine::annotation(const Simplex& s) {
  SimplexTree::Node* n = tree_.find(s);
  if (!n) throw std::invalid_argument("annotation: simplex not present");
  return forest_.value_of(handle(n));
}

}  // namespace cech
