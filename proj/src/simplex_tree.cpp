#include "cech/simplex_tree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cech {

SimplexTree::SimplexTree() : root_(std::make_unique<Node>()) {}

Simplex SimplexTree::simplex_of(const Node* n) const {
  Simplex s;
  for (const Node* cur = n; cur->parent != nullptr; cur = cur->parent) s.push_back(cur->label);
  std::reverse(s.begin(), s.end());
  return s;
}

void SimplexTree::link_cousin(Node* n) {
  const auto key = std::make_pair(n->label, n->depth);
  auto it = cousin_reps_.find(key);
  if (it == cousin_reps_.end()) {
    n->cousin = n;
    cousin_reps_[key] = n;
  } else {
    Node* rep = it->second;
    n->cousin = rep->cousin;
    rep->cousin = n;
  }
}

void SimplexTree::unlink_cousin(Node* n) {
  const auto key = std::make_pair(n->label, n->depth);
  if (n->cousin == n) {
    cousin_reps_.erase(key);
    return;
  }
  // Predecessor walk; cycles are short at desk scale.
  Node* prev = n;
  while (prev->cousin != n) prev = prev->cousin;
  prev->cousin = n->cousin;
  auto it = cousin_reps_.find(key);
  if (it != cousin_reps_.end() && it->second == n) it->second = prev;
}

SimplexTree::Node* SimplexTree::find(const Simplex& sigma) const {
  const Node* cur = root_.get();
  for (VertexId v : sigma) {
    auto it = cur->children.find(v);
    if (it == cur->children.end()) return nullptr;
    cur = it->second.get();
  }
  return cur == root_.get() ? nullptr : const_cast<Node*>(cur);
}

SimplexTree::Node* SimplexTree::insert_one(const Simplex& sigma) {
  if (!simplex_valid(sigma)) throw std::invalid_argument("insert_one: invalid simplex");
  Node* cur = root_.get();
  for (std::size_t k = 0; k + 1 < sigma.size(); ++k) {
    auto it = cur->children.find(sigma[k]);
    if (it == cur->children.end())
      throw std::invalid_argument("insert_one: missing face " +
                                  simplex_to_string(Simplex(sigma.begin(), sigma.begin() + k + 1)));
    cur = it->second.get();
  }
  const VertexId last = sigma.back();
  auto it = cur->children.find(last);
  if (it != cur->children.end()) return it->second.get();
  auto node = std::make_unique<Node>();
  node->label = last;
  node->depth = cur->depth + 1;
  node->parent = cur;
  Node* raw = node.get();
  cur->children.emplace(last, std::move(node));
  link_cousin(raw);
  ++count_;
  depth_bound_ = std::max(depth_bound_, raw->depth);
  return raw;
}

std::vector<Simplex> SimplexTree::insert_closed(const Simplex& sigma) {
  if (!simplex_valid(sigma)) throw std::invalid_argument("insert_closed: invalid simplex");
  // All nonempty subsets, in dimension-then-lexicographic order.
  std::vector<Simplex> subsets;
  const std::size_t k = sigma.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
    Simplex s;
    for (std::size_t b = 0; b < k; ++b)
      if (mask & (std::size_t(1) << b)) s.push_back(sigma[b]);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), SimplexOrder{});
  std::vector<Simplex> added;
  for (const Simplex& s : subsets)
    if (!contains(s)) {
      insert_one(s);
      added.push_back(s);
    }
  return added;
}

std::vector<Simplex> SimplexTree::faces(const Simplex& sigma) const {
  std::vector<Simplex> out;
  const std::size_t k = sigma.size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << k); ++mask) {
    Simplex s;
    for (std::size_t b = 0; b < k; ++b)
      if (mask & (std::size_t(1) << b)) s.push_back(sigma[b]);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), SimplexOrder{});
  return out;
}

void SimplexTree::collect_subtree(const Node* n, std::vector<Simplex>& out) const {
  out.push_back(simplex_of(n));
  for (const auto& [label, child] : n->children) collect_subtree(child.get(), out);
}

std::vector<Simplex> SimplexTree::cofaces(const Simplex& sigma) const {
  if (!simplex_valid(sigma)) throw std::invalid_argument("cofaces: invalid simplex");
  std::vector<Simplex> out;
  const VertexId last = sigma.back();
  for (int depth = static_cast<int>(sigma.size()); depth <= depth_bound_; ++depth) {
    for_each_cousin(last, depth, [&](Node* n) {
      // n's path must contain all of sigma; labels decrease walking up.
      std::size_t k = sigma.size();
      for (const Node* cur = n; cur->parent != nullptr && k > 0; cur = cur->parent) {
        if (cur->label == sigma[k - 1])
          --k;
        else if (cur->label < sigma[k - 1])
          break;
      }
      if (k == 0) collect_subtree(n, out);
    });
  }
  std::sort(out.begin(), out.end(), SimplexOrder{});
  return out;
}

std::vector<Simplex> SimplexTree::link(const Simplex& sigma) const {
  if (!contains(sigma)) throw std::invalid_argument("link: simplex not present");
  std::vector<Simplex> out;
  for (const Simplex& tau : cofaces(sigma)) {
    Simplex rest;
    std::set_difference(tau.begin(), tau.end(), sigma.begin(), sigma.end(),
                        std::back_inserter(rest));
    if (!rest.empty()) out.push_back(std::move(rest));
  }
  std::sort(out.begin(), out.end(), SimplexOrder{});
  return out;
}

std::vector<Simplex> SimplexTree::link_deficiency(VertexId a, VertexId b) const {
  Simplex edge{std::min(a, b), std::max(a, b)};
  if (!contains(edge)) throw std::invalid_argument("link_deficiency: edge not present");
  const auto la = link(Simplex{a});
  const auto lb = link(Simplex{b});
  const auto lab = link(edge);
  std::set<Simplex> sa(la.begin(), la.end());
  std::set<Simplex> sab(lab.begin(), lab.end());
  std::vector<Simplex> out;
  for (const Simplex& s : lb)
    if (sa.count(s) && !sab.count(s)) out.push_back(s);
  std::sort(out.begin(), out.end(), SimplexOrder{});
  return out;
}

void SimplexTree::remove_subtree(Node* n) {
  while (!n->children.empty()) remove_subtree(n->children.begin()->second.get());
  unlink_cousin(n);
  --count_;
  n->parent->children.erase(n->label);
}

Simplex contract_image(const Simplex& sigma, VertexId a, VertexId b) {
  const bool has_a = simplex_has(sigma, a);
  const bool has_b = simplex_has(sigma, b);
  if (!has_b) return sigma;
  Simplex out = simplex_without(sigma, b);
  if (!has_a) out = simplex_with(out, a);
  return out;
}

SimplexTree::ContractReport SimplexTree::structural_contract(VertexId a, VertexId b) {
  if (a == b) throw std::invalid_argument("structural_contract: a == b");
  Simplex edge{std::min(a, b), std::max(a, b)};
  if (!contains(edge)) throw std::invalid_argument("structural_contract: edge not present");
  if (!link_deficiency(a, b).empty())
    throw std::invalid_argument("structural_contract: link condition not satisfied");

  ContractReport report;
  report.removed = cofaces(Simplex{b});

  // Group the vanishing simplices by image; a class also merges with the
  // image itself when it already exists.
  std::map<Simplex, std::vector<Simplex>, SimplexOrder> classes;
  for (const Simplex& s : report.removed) classes[contract_image(s, a, b)].push_back(s);
  for (const auto& [image, preimages] : classes) {
    std::vector<Simplex> members = preimages;
    if (contains(image)) members.push_back(image);
    std::sort(members.begin(), members.end(), SimplexOrder{});
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        report.mirror_pairs.emplace_back(members[i], members[j]);
  }

  // Delete every subtree rooted at a b-labeled node; labels are strictly
  // increasing along paths, so these subtrees are exactly the b-simplices.
  std::vector<Node*> broots;
  for (int depth = 1; depth <= depth_bound_; ++depth)
    for_each_cousin(b, depth, [&](Node* n) { broots.push_back(n); });
  for (Node* n : broots) remove_subtree(n);

  // Insert missing images in dimension order; their faces are images of
  // faces, so each is a single-node insertion.
  for (const auto& [image, preimages] : classes)
    if (!contains(image)) {
      insert_one(image);
      report.added.push_back(image);
    }
  return report;
}

std::vector<Simplex> SimplexTree::all_simplices() const {
  std::vector<Simplex> out;
  out.reserve(count_);
  for (const auto& [label, child] : root_->children) collect_subtree(child.get(), out);
  std::sort(out.begin(), out.end(), SimplexOrder{});
  return out;
}

std::string SimplexTree::dump() const {
  std::string out;
  for (const Simplex& s : all_simplices()) {
    out += simplex_to_string(s);
    out += '\n';
  }
  return out;
}

}  // namespace cech
