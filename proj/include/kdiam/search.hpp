#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "kdiam/catalog.hpp"
#include "kdiam/verify.hpp"

namespace kdiam {

enum class SearchProperty { diametral, antipodal };

template <Scalar T>
struct SearchProblem {
  PointConfiguration<T> family;
  Norm<T> norm = Norm<T>::euclidean();
  std::size_t k = 2;
  SearchProperty property = SearchProperty::diametral;
  std::uint64_t max_nodes = 50'000'000;
  std::uint64_t seed = 1;
};

struct SearchResult {
  std::size_t best_size = 0;
  std::vector<std::size_t> best_subset;
  bool exhaustive = true;
  std::uint64_t nodes_visited = 0;
  std::optional<std::string> diameter_key;
};

namespace detail {

template <Scalar T>
void require_distinct(const PointConfiguration<T>& x, const Tolerance& tol) {
  if (distinct_points(x, tol).values.size() != x.size())
    throw Error(ErrorKind::invalid_spec, "search family points must be distinct");
}

template <Scalar T>
PointConfiguration<T> subset_of(const PointConfiguration<T>& x, const std::vector<std::size_t>& idx) {
  std::vector<Point<T>> pts;
  for (auto i : idx) pts.push_back(x[i]);
  return PointConfiguration<T>(x.dim(), std::move(pts));
}

// Branch and bound for one diameter layer t: grow S from candidates whose keys
// to every member are <= t, keeping the key-t graph on S free of independent
// k-sets. A set only counts once it contains a key-t pair.
class LayerSearch {
 public:
  LayerSearch(const std::vector<std::vector<int>>& cmp, std::size_t k, std::size_t& best,
              std::vector<std::size_t>& best_set, std::uint64_t& nodes, std::uint64_t budget)
      : cmp_(cmp), k_(k), best_(best), best_set_(best_set), nodes_(nodes), budget_(budget) {}

  bool run(std::vector<std::size_t> cand) {
    std::vector<std::size_t> cur;
    return dfs(cur, cand, false);
  }

 private:
  bool edge(std::size_t a, std::size_t b) const { return cmp_[a][b] == 0; }

  // |S| + sum over a greedy colouring of C (independent classes of the key-t
  // graph) of min(class size, k-1).
  std::size_t bound(const std::vector<std::size_t>& cur, const std::vector<std::size_t>& cand) const {
    std::vector<std::vector<std::size_t>> classes;
    for (auto v : cand) {
      bool placed = false;
      for (auto& c : classes) {
        bool ok = true;
        for (auto w : c) ok = ok && !edge(v, w);
        if (ok) {
          c.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    std::size_t b = cur.size();
    for (const auto& c : classes) b += std::min(c.size(), k_ - 1);
    return b;
  }

  // Whether S + v still has no independent k-set in the key-t graph.
  bool admissible(const std::vector<std::size_t>& cur, std::size_t v) const {
    std::vector<std::size_t> far;
    for (auto w : cur)
      if (!edge(v, w)) far.push_back(w);
    if (far.size() + 1 < k_) return true;
    LabeledGraph g(far.size());
    for (std::size_t a = 0; a < far.size(); ++a)
      for (std::size_t b = a + 1; b < far.size(); ++b)
        if (edge(far[a], far[b])) g.add_edge(a, b);
    return !find_independent_set(g, k_ - 1).has_value();
  }

  bool dfs(std::vector<std::size_t>& cur, const std::vector<std::size_t>& cand, bool has_edge) {
    if (++nodes_ > budget_) return false;
    if (has_edge && cur.size() > best_) {
      best_ = cur.size();
      best_set_ = cur;
    }
    if (cur.size() + cand.size() <= best_ || bound(cur, cand) <= best_) return true;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::size_t v = cand[i];
      if (!admissible(cur, v)) continue;
      bool e = has_edge;
      for (auto w : cur) e = e || edge(v, w);
      std::vector<std::size_t> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (cmp_[v][cand[j]] <= 0) next.push_back(cand[j]);
      cur.push_back(v);
      bool ok = dfs(cur, next, e);
      cur.pop_back();
      if (!ok) return false;
      if (cur.size() + (cand.size() - i - 1) <= best_) break;
    }
    return true;
  }

  const std::vector<std::vector<int>>& cmp_;
  std::size_t k_;
  std::size_t& best_;
  std::vector<std::size_t>& best_set_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
};

}  // namespace detail

/// Largest k-diametral subset of a family of distinct points.
///
/// For every distance key t realized in the family, the search restricts to
/// subsets whose keys are all <= t and contain a pair at t; on those the
/// diameter graph is the fixed key-t graph. The result is exhaustive unless the
/// node budget ran out.
template <Scalar T>
SearchResult max_k_diametral_subset(const SearchProblem<T>& prob, const Tolerance& tol = {}) {
  detail::require_k(prob.k);
  const auto& x = prob.family;
  detail::require_distinct(x, tol);
  const std::size_t n = x.size();
  std::vector<std::vector<T>> key(n, std::vector<T>(n, T(0)));
  std::vector<T> levels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      key[i][j] = key[j][i] = prob.norm.distance_key(x[i], x[j], tol);
      levels.push_back(key[i][j]);
    }
  std::sort(levels.begin(), levels.end(), [](const T& a, const T& b) { return b < a; });
  std::vector<T> distinct_levels;
  for (const auto& t : levels)
    if (distinct_levels.empty() || !keys_equal(distinct_levels.back(), t, tol)) distinct_levels.push_back(t);

  SearchResult res;
  std::size_t best = 0;
  std::vector<std::size_t> best_set;
  T best_t(0);
  for (const auto& t : distinct_levels) {
    // cmp[i][j]: -1 below t, 0 at t, +1 above t.
    std::vector<std::vector<int>> cmp(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) cmp[i][j] = keys_equal(key[i][j], t, tol) ? 0 : (key[i][j] < t ? -1 : 1);
    std::vector<std::size_t> cand(n);
    std::iota(cand.begin(), cand.end(), std::size_t{0});
    std::size_t before = best;
    detail::LayerSearch layer(cmp, prob.k, best, best_set, res.nodes_visited, prob.max_nodes);
    if (!layer.run(cand)) {
      res.exhaustive = false;
      break;
    }
    if (best > before) best_t = t;
  }
  std::sort(best_set.begin(), best_set.end());
  res.best_size = best;
  res.best_subset = best_set;
  if (best > 0) {
    res.diameter_key = format_scalar(best_t);
    auto check = is_k_diametral(detail::subset_of(x, best_set), prob.norm, prob.k, tol);
    if (!check.verdict) throw Error(ErrorKind::invalid_instance, "search witness failed re-verification");
  }
  return res;
}

/// Largest k-antipodal subset: subsets are tried by decreasing size and the
/// antipodal graph is recomputed for each, so the first success is maximum.
template <Scalar T>
SearchResult max_k_antipodal_subset(const SearchProblem<T>& prob, const Tolerance& tol = {}) {
  detail::require_k(prob.k);
  const auto& x = prob.family;
  detail::require_distinct(x, tol);
  SearchResult res;
  for (std::size_t size = x.size(); size >= 1; --size) {
    bool found = false;
    detail::for_each_combination(x.size(), size, [&](std::span<const std::size_t> sub) {
      if (found || !res.exhaustive) return;
      if (++res.nodes_visited > prob.max_nodes) {
        res.exhaustive = false;
        return;
      }
      std::vector<std::size_t> idx(sub.begin(), sub.end());
      auto s = detail::subset_of(x, idx);
      auto g = antipodal_graph(s, tol);
      if (size < prob.k || !find_independent_set(g, prob.k)) {
        found = true;
        res.best_size = size;
        res.best_subset = idx;
      }
    });
    if (found || !res.exhaustive) break;
  }
  if (res.best_size > 0) {
    auto check = is_k_antipodal(detail::subset_of(x, res.best_subset), prob.k, tol);
    if (!check.verdict) throw Error(ErrorKind::invalid_instance, "search witness failed re-verification");
  }
  return res;
}

template <Scalar T>
SearchResult run_search(const SearchProblem<T>& prob, const Tolerance& tol = {}) {
  return prob.property == SearchProperty::diametral ? max_k_diametral_subset(prob, tol)
                                                    : max_k_antipodal_subset(prob, tol);
}

/// Isomorphism classes of 6-vertex graphs surviving each constraint of the
/// 3-diametral classification in Euclidean 3-space, alone and combined.
struct GraphEnumeration {
  std::size_t classes_total = 0;
  std::size_t independence_at_most_two = 0;
  std::size_t odd_cycles_intersect = 0;
  std::size_t pyramid_free = 0;
  std::vector<LabeledGraph> survivors;
};

namespace detail {

// Canonical code of a graph on at most 8 vertices: the least adjacency bitmask
// over all relabelings.
inline std::uint32_t canonical_code(const LabeledGraph& g) {
  const std::size_t n = g.n();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint32_t best = ~0u;
  do {
    std::uint32_t code = 0;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++bit)
        if (g.adjacent(perm[i], perm[j])) code |= 1u << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline LabeledGraph graph_from_code(std::size_t n, std::uint32_t code) {
  LabeledGraph g(n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if (code >> bit & 1) g.add_edge(i, j);
  return g;
}

}  // namespace detail

/// All 6-vertex graphs, up to isomorphism, with no independent 3-set, pairwise
/// intersecting odd cycles and no pyramid subgraph. Survivors are ordered by
/// edge count, then canonical code.
inline GraphEnumeration enumerate_candidate_diameter_graphs() {
  constexpr std::size_t n = 6;
  constexpr std::uint32_t pairs = n * (n - 1) / 2;
  std::set<std::uint32_t> codes;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    auto g = detail::graph_from_code(n, mask);
    codes.insert(detail::canonical_code(g));
  }
  GraphEnumeration out;
  out.classes_total = codes.size();
  const auto pyramid = pyramid_graph();
  std::vector<std::pair<std::size_t, std::uint32_t>> keep;
  for (auto code : codes) {
    auto g = detail::graph_from_code(n, code);
    bool alpha = !find_independent_set(g, 3).has_value();
    bool odd = odd_cycles_pairwise_intersect(g);
    bool pyr = !contains_subgraph(pyramid, g).has_value();
    out.independence_at_most_two += alpha;
    out.odd_cycles_intersect += odd;
    out.pyramid_free += pyr;
    if (alpha && odd && pyr) keep.emplace_back(g.edge_count(), code);
  }
  std::sort(keep.begin(), keep.end());
  for (auto [e, code] : keep) out.survivors.push_back(detail::graph_from_code(n, code));
  return out;
}

}  // namespace kdiam
