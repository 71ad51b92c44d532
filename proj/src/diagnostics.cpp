#include "cech/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace cech {

namespace {

// Cliques of the neighborhood graph dist <= 2*alpha, extended in label order.
void enumerate_cliques(const std::vector<std::vector<int>>& neighbors, int max_dim,
                       std::size_t guard, Simplex& current, int last,
                       const std::function<void(const Simplex&)>& emit, std::size_t& seen) {
  if (simplex_dim(current) >= max_dim) return;
  for (int v : neighbors[static_cast<std::size_t>(last)]) {
    if (v <= last) continue;
    bool ok = true;
    for (VertexId u : current) {
      if (u == last) continue;
      if (!std::binary_search(neighbors[static_cast<std::size_t>(u)].begin(),
                              neighbors[static_cast<std::size_t>(u)].end(), v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (++seen > guard) throw std::runtime_error("enumerate_cech: simplex guard exceeded");
    current.push_back(v);
    emit(current);
    enumerate_cliques(neighbors, max_dim, guard, current, v, emit, seen);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::pair<Simplex, double>> enumerate_cech(const PointCloud& cloud, double alpha,
                                                       int max_dim, std::size_t simplex_guard) {
  const int n = cloud.size();
  std::vector<std::vector<int>> neighbors(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((cloud.coords().row(i) - cloud.coords().row(j)).norm() <= 2.0 * alpha) {
        neighbors[static_cast<std::size_t>(i)].push_back(j);
        neighbors[static_cast<std::size_t>(j)].push_back(i);
      }
  for (auto& nb : neighbors) std::sort(nb.begin(), nb.end());

  std::vector<std::pair<Simplex, double>> raw;
  std::size_t seen = 0;
  std::function<void(const Simplex&)> emit = [&](const Simplex& s) {
    const double value = cech_value(s, cloud);
    if (value <= alpha) raw.emplace_back(s, value);
  };
  for (int i = 0; i < n; ++i) {
    if (++seen > simplex_guard) throw std::runtime_error("enumerate_cech: simplex guard exceeded");
    Simplex current{i};
    raw.emplace_back(current, 0.0);
    enumerate_cliques(neighbors, max_dim, simplex_guard, current, i, emit, seen);
  }

  // Rounding can leave a coface's miniball a hair below a facet's; enforce
  // monotone values so sorting by (value, dim, lex) puts faces first, and
  // drop anything whose facet fell past the threshold.
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return SimplexOrder{}(a.first, b.first); });
  std::map<Simplex, double, SimplexOrder> fixed;
  std::vector<std::pair<Simplex, double>> out;
  for (auto& [s, value] : raw) {
    double v = value;
    bool keep = true;
    if (s.size() > 1) {
      for (std::size_t skip = 0; skip < s.size() && keep; ++skip) {
        Simplex facet;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != skip) facet.push_back(s[k]);
        auto it = fixed.find(facet);
        if (it == fixed.end())
          keep = false;
        else
          v = std::max(v, it->second);
      }
    }
    if (!keep) continue;
    fixed.emplace(s, v);
    out.emplace_back(std::move(s), v);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return SimplexOrder{}(a.first, b.first);
  });
  return out;
}

PersistenceDiagram oracle_cech(const PointCloud& cloud, double alpha_max, int max_dim,
                               std::size_t simplex_guard) {
  const auto filtration = enumerate_cech(cloud, alpha_max, max_dim, simplex_guard);
  const std::size_t m = filtration.size();
  std::map<Simplex, std::size_t, SimplexOrder> index;
  for (std::size_t i = 0; i < m; ++i) index[filtration[i].first] = i;

  // Standard Z2 column reduction. Columns hold facet indices, largest last.
  std::vector<std::vector<std::size_t>> cols(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Simplex& s = filtration[i].first;
    if (s.size() == 1) continue;
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      Simplex facet;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (k != skip) facet.push_back(s[k]);
      cols[i].push_back(index.at(facet));
    }
    std::sort(cols[i].begin(), cols[i].end());
  }

  auto xor_into = [](std::vector<std::size_t>& dst, const std::vector<std::size_t>& src) {
    std::vector<std::size_t> out;
    out.reserve(dst.size() + src.size());
    std::set_symmetric_difference(dst.begin(), dst.end(), src.begin(), src.end(),
                                  std::back_inserter(out));
    dst = std::move(out);
  };

  std::vector<std::size_t> pivot_owner(m, SIZE_MAX);
  std::vector<char> is_paired(m, 0);
  PersistenceDiagram out;
  for (std::size_t j = 0; j < m; ++j) {
    auto& col = cols[j];
    while (!col.empty() && pivot_owner[col.back()] != SIZE_MAX) xor_into(col, cols[pivot_owner[col.back()]]);
    if (col.empty()) continue;  // j is a birth column
    const std::size_t i = col.back();
    pivot_owner[i] = j;
    is_paired[i] = 1;
    is_paired[j] = 1;
    const int dim = simplex_dim(filtration[i].first);
    const double birth = filtration[i].second;
    const double death = filtration[j].second;
    if (death > birth && dim < max_dim) out.intervals.push_back(Interval{dim, birth, death});
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (is_paired[i] || !cols[i].empty()) continue;
    const int dim = simplex_dim(filtration[i].first);
    if (dim < max_dim)
      out.intervals.push_back(Interval{dim, filtration[i].second, kInfDeath});
  }
  out.sort();
  return out;
}

std::vector<int> betti_numbers(const std::vector<Simplex>& complex, int up_to_dim) {
  std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(up_to_dim) + 2);
  for (const Simplex& s : complex) {
    const int d = simplex_dim(s);
    if (d <= up_to_dim + 1) by_dim[static_cast<std::size_t>(d)].push_back(s);
  }
  for (auto& v : by_dim) std::sort(v.begin(), v.end(), SimplexOrder{});

  // rank of the boundary map C_d -> C_{d-1} over Z2
  auto boundary_rank = [&](int d) -> int {
    if (d <= 0 || by_dim[static_cast<std::size_t>(d)].empty()) return 0;
    const auto& rows = by_dim[static_cast<std::size_t>(d - 1)];
    const auto& colsimplices = by_dim[static_cast<std::size_t>(d)];
    std::map<Simplex, int, SimplexOrder> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);
    const std::size_t words = (rows.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> cols;
    for (const Simplex& s : colsimplices) {
      std::vector<std::uint64_t> col(words, 0);
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        Simplex facet;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != skip) facet.push_back(s[k]);
        const int r = row_index.at(facet);
        col[static_cast<std::size_t>(r) / 64] ^= (1ull << (static_cast<std::size_t>(r) % 64));
      }
      cols.push_back(std::move(col));
    }
    int rank = 0;
    std::vector<int> pivot_of_col;
    std::vector<std::size_t> reduced;  // indices of independent columns
    for (auto& col : cols) {
      for (std::size_t k = 0; k < reduced.size(); ++k) {
        const int p = pivot_of_col[k];
        if (col[static_cast<std::size_t>(p) / 64] >> (static_cast<std::size_t>(p) % 64) & 1ull)
          for (std::size_t w = 0; w < words; ++w) col[w] ^= cols[reduced[k]][w];
      }
      int pivot = -1;
      for (std::size_t w = words; w-- > 0;) {
        if (col[w]) {
          pivot = static_cast<int>(w * 64 + (63 - static_cast<std::size_t>(__builtin_clzll(col[w]))));
          break;
        }
      }
      if (pivot >= 0) {
        ++rank;
        pivot_of_col.push_back(pivot);
        reduced.push_back(static_cast<std::size_t>(&col - cols.data()));
      }
    }
    return rank;
  };

  std::vector<int> betti(static_cast<std::size_t>(up_to_dim) + 1, 0);
  for (int d = 0; d <= up_to_dim; ++d) {
    const int n_d = static_cast<int>(by_dim[static_cast<std::size_t>(d)].size());
    betti[static_cast<std::size_t>(d)] = n_d - boundary_rank(d) - boundary_rank(d + 1);
  }
  return betti;
}

namespace {

struct FinitePoint {
  double birth, death;
  double diag_cost() const { return 0.5 * (death - birth); }
};

double point_cost(const FinitePoint& a, const FinitePoint& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

// Perfect matching feasibility at threshold c on the standard bipartite
// reduction (each side gets diagonal slots for the other side's points).
bool feasible(const std::vector<FinitePoint>& a, const std::vector<FinitePoint>& b, double c) {
  const int n1 = static_cast<int>(a.size());
  const int n2 = static_cast<int>(b.size());
  const int nl = n1 + n2;  // left: a points then diagonal slots for b
  const int nr = n2 + n1;  // right: b points then diagonal slots for a
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nl));
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j)
      if (point_cost(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]) <= c)
        adj[static_cast<std::size_t>(i)].push_back(j);
    if (a[static_cast<std::size_t>(i)].diag_cost() <= c)
      adj[static_cast<std::size_t>(i)].push_back(n2 + i);
  }
  for (int j = 0; j < n2; ++j) {
    auto& slots = adj[static_cast<std::size_t>(n1 + j)];
    if (b[static_cast<std::size_t>(j)].diag_cost() <= c) slots.push_back(j);
    for (int i = 0; i < n1; ++i) slots.push_back(n2 + i);  // diagonal-diagonal, cost 0
  }
  std::vector<int> match_right(static_cast<std::size_t>(nr), -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int l) -> bool {
    for (int r : adj[static_cast<std::size_t>(l)]) {
      if (visited[static_cast<std::size_t>(r)]) continue;
      visited[static_cast<std::size_t>(r)] = 1;
      if (match_right[static_cast<std::size_t>(r)] < 0 ||
          augment(match_right[static_cast<std::size_t>(r)])) {
        match_right[static_cast<std::size_t>(r)] = l;
        return true;
      }
    }
    return false;
  };
  for (int l = 0; l < nl; ++l) {
    visited.assign(static_cast<std::size_t>(nr), 0);
    if (!augment(l)) return false;
  }
  return true;
}

double finite_bottleneck(const std::vector<FinitePoint>& a, const std::vector<FinitePoint>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::vector<double> candidates{0.0};
  for (const auto& p : a) candidates.push_back(p.diag_cost());
  for (const auto& p : b) candidates.push_back(p.diag_cost());
  for (const auto& p : a)
    for (const auto& q : b) candidates.push_back(point_cost(p, q));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  // The largest candidate is always feasible (everything can take its diagonal).
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (feasible(a, b, candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

double bottleneck_impl(std::vector<FinitePoint> fa, std::vector<double> ia,
                       std::vector<FinitePoint> fb, std::vector<double> ib) {
  if (ia.size() != ib.size()) return kInfDeath;
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  double essential = 0.0;
  for (std::size_t k = 0; k < ia.size(); ++k)
    essential = std::max(essential, std::abs(ia[k] - ib[k]));
  return std::max(essential, finite_bottleneck(fa, fb));
}

void split_diagram(const PersistenceDiagram& d, int dim, std::vector<FinitePoint>& finite,
                   std::vector<double>& essential) {
  for (const Interval& iv : d.intervals) {
    if (iv.dim != dim) continue;
    if (iv.essential())
      essential.push_back(iv.birth);
    else
      finite.push_back(FinitePoint{iv.birth, iv.death});
  }
}

}  // namespace

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim) {
  std::vector<FinitePoint> fa, fb;
  std::vector<double> ia, ib;
  split_diagram(a, dim, fa, ia);
  split_diagram(b, dim, fb, ib);
  return bottleneck_impl(std::move(fa), std::move(ia), std::move(fb), std::move(ib));
}

double log_bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim,
                      double floor_value) {
  if (floor_value <= 0.0) throw std::invalid_argument("log_bottleneck: floor must be positive");
  auto logged = [&](const PersistenceDiagram& d) {
    PersistenceDiagram out;
    for (Interval iv : d.intervals) {
      if (iv.dim != dim) continue;
      iv.birth = std::log(std::max(iv.birth, floor_value));
      if (!iv.essential()) iv.death = std::log(std::max(iv.death, floor_value));
      if (iv.death > iv.birth || iv.essential()) out.intervals.push_back(iv);
    }
    return out;
  };
  return bottleneck(logged(a), logged(b), dim);
}

bool cech_rips_sandwich_check(const PointCloud& cloud, double alpha, int max_dim) {
  const auto cech_small = enumerate_cech(cloud, alpha, max_dim);
  const auto cech_big = enumerate_cech(cloud, std::sqrt(2.0) * alpha, max_dim);

  // Rips = cliques of the 1-skeleton of C(P; alpha): pairwise distance <= 2 alpha.
  std::set<Simplex> rips;
  const int n = cloud.size();
  std::vector<std::vector<int>> neighbors(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((cloud.coords().row(i) - cloud.coords().row(j)).norm() <= 2.0 * alpha) {
        neighbors[static_cast<std::size_t>(i)].push_back(j);
        neighbors[static_cast<std::size_t>(j)].push_back(i);
      }
  std::function<void(Simplex&)> extend = [&](Simplex& cur) {
    rips.insert(cur);
    if (simplex_dim(cur) >= max_dim) return;
    const int last = cur.back();
    for (int v : neighbors[static_cast<std::size_t>(last)]) {
      if (v <= last) continue;
      bool ok = true;
      for (VertexId u : cur)
        if (u != last && !std::binary_search(neighbors[static_cast<std::size_t>(u)].begin(),
                                             neighbors[static_cast<std::size_t>(u)].end(), v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(v);
      extend(cur);
      cur.pop_back();
    }
  };
  for (int i = 0; i < n; ++i) {
    Simplex s{i};
    extend(s);
  }

  std::set<Simplex> small_set, big_set;
  for (const auto& [s, v] : cech_small) small_set.insert(s);
  for (const auto& [s, v] : cech_big) big_set.insert(s);
  for (const Simplex& s : small_set)
    if (!rips.count(s)) return false;
  for (const Simplex& s : rips)
    if (!big_set.count(s)) return false;
  return true;
}

}  // namespace cech
