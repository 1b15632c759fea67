#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdiam/errors.hpp"

namespace kdiam {

enum class GraphKind { diameter, antipodal, unit_distance, abstract };

inline const char* to_string(GraphKind k) {
  switch (k) {
    case GraphKind::diameter: return "diameter";
    case GraphKind::antipodal: return "antipodal";
    case GraphKind::unit_distance: return "unit-distance";
    case GraphKind::abstract: return "abstract";
  }
  return "abstract";
}

inline GraphKind graph_kind_from_string(const std::string& s) {
  if (s == "diameter") return GraphKind::diameter;
  if (s == "antipodal") return GraphKind::antipodal;
  if (s == "unit-distance") return GraphKind::unit_distance;
  if (s == "abstract") return GraphKind::abstract;
  throw Error(ErrorKind::parse_error, "unknown graph kind '" + s + "'");
}

/// Simple undirected graph on configuration indices 0..n-1.
class LabeledGraph {
 public:
  explicit LabeledGraph(std::size_t n = 0, GraphKind kind = GraphKind::abstract)
      : n_(n), kind_(kind), adj_(n, std::vector<bool>(n, false)) {}

  LabeledGraph(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges,
               GraphKind kind = GraphKind::abstract)
      : LabeledGraph(n, kind) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  std::size_t n() const { return n_; }
  GraphKind kind() const { return kind_; }
  void set_kind(GraphKind k) { kind_ = k; }
  const std::optional<std::string>& diameter_key() const { return diameter_key_; }
  void set_diameter_key(std::optional<std::string> key) { diameter_key_ = std::move(key); }

  void add_edge(std::size_t a, std::size_t b) {
    if (a >= n_ || b >= n_) throw Error(ErrorKind::index_out_of_range, "edge endpoint out of range");
    if (a == b) throw Error(ErrorKind::invalid_spec, "graphs have no loops");
    if (adj_[a][b]) return;
    adj_[a][b] = adj_[b][a] = true;
    ++edge_count_;
  }

  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a][b]; }
  std::size_t edge_count() const { return edge_count_; }

  std::size_t degree(std::size_t v) const {
    return static_cast<std::size_t>(std::count(adj_[v].begin(), adj_[v].end(), true));
  }

  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> d(n_);
    for (std::size_t v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
  }

  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (adj_[i][j]) e.emplace_back(i, j);
    return e;
  }

  LabeledGraph induced(const std::vector<std::size_t>& vertices) const {
    LabeledGraph g(vertices.size(), kind_);
    for (std::size_t a = 0; a < vertices.size(); ++a)
      for (std::size_t b = a + 1; b < vertices.size(); ++b)
        if (adj_[vertices[a]][vertices[b]]) g.add_edge(a, b);
    return g;
  }

  /// Same edges, kind ignored.
  bool same_edges(const LabeledGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  std::size_t n_;
  GraphKind kind_;
  std::vector<std::vector<bool>> adj_;
  std::size_t edge_count_ = 0;
  std::optional<std::string> diameter_key_;
};

namespace detail {

inline bool independent_search(const LabeledGraph& g, std::size_t k, std::vector<std::size_t>& cur,
                               const std::vector<std::size_t>& cand) {
  if (cur.size() >= k) return true;
  if (cur.size() + cand.size() < k) return false;
  // Greedy clique cover: an independent set meets each clique at most once.
  {
    std::vector<std::vector<std::size_t>> cliques;
    for (auto v : cand) {
      bool placed = false;
      for (auto& c : cliques) {
        bool ok = true;
        for (auto u : c) ok = ok && g.adjacent(u, v);
        if (ok) {
          c.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) cliques.push_back({v});
    }
    if (cur.size() + cliques.size() < k) return false;
  }
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (cur.size() + (cand.size() - i) < k) return false;
    std::size_t v = cand[i];
    std::vector<std::size_t> next;
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      if (!g.adjacent(v, cand[j])) next.push_back(cand[j]);
    cur.push_back(v);
    if (independent_search(g, k, cur, next)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace detail

/// A set of k pairwise non-adjacent vertices, or nothing if none exists.
/// Branches on the lowest-index candidate first, so the answer is deterministic.
inline std::optional<std::vector<std::size_t>> find_independent_set(const LabeledGraph& g,
                                                                    std::size_t k) {
  if (k == 0) return std::vector<std::size_t>{};
  std::vector<std::size_t> cand(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) cand[i] = i;
  std::vector<std::size_t> cur;
  if (detail::independent_search(g, k, cur, cand)) return cur;
  return std::nullopt;
}

inline std::size_t independence_number(const LabeledGraph& g) {
  std::size_t k = 0;
  while (k < g.n() && find_independent_set(g, k + 1)) ++k;
  return k;
}

namespace detail {

inline bool embed_search(const LabeledGraph& p, const LabeledGraph& g,
                         const std::vector<std::size_t>& order, std::size_t depth,
                         std::vector<std::size_t>& map, std::vector<bool>& used) {
  if (depth == order.size()) return true;
  std::size_t pv = order[depth];
  for (std::size_t gv = 0; gv < g.n(); ++gv) {
    if (used[gv] || g.degree(gv) < p.degree(pv)) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      std::size_t pu = order[d];
      if (p.adjacent(pv, pu) && !g.adjacent(gv, map[pu])) ok = false;
    }
    if (!ok) continue;
    map[pv] = gv;
    used[gv] = true;
    if (embed_search(p, g, order, depth + 1, map, used)) return true;
    used[gv] = false;
  }
  return false;
}

}  // namespace detail

/// Injective map of pattern vertices into g preserving pattern edges (not induced).
inline std::optional<std::vector<std::size_t>> contains_subgraph(const LabeledGraph& pattern,
                                                                 const LabeledGraph& g) {
  if (pattern.n() > g.n() || pattern.edge_count() > g.edge_count()) return std::nullopt;
  std::vector<std::size_t> order(pattern.n());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pattern.degree(a) > pattern.degree(b);
  });
  std::vector<std::size_t> map(pattern.n(), 0);
  std::vector<bool> used(g.n(), false);
  if (detail::embed_search(pattern, g, order, 0, map, used)) return map;
  return std::nullopt;
}

namespace detail {

// Colour refinement: iterated (colour, sorted neighbour colours) signatures,
// computed jointly so colours are comparable across graphs.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(
    const LabeledGraph& a, const LabeledGraph& b) {
  std::vector<std::size_t> ca(a.n()), cb(b.n());
  for (std::size_t v = 0; v < a.n(); ++v) ca[v] = a.degree(v);
  for (std::size_t v = 0; v < b.n(); ++v) cb[v] = b.degree(v);
  for (std::size_t round = 0; round < a.n() + 1; ++round) {
    using Sig = std::pair<std::size_t, std::vector<std::size_t>>;
    auto sig = [](const LabeledGraph& g, const std::vector<std::size_t>& c, std::size_t v) {
      std::vector<std::size_t> nb;
      for (std::size_t u = 0; u < g.n(); ++u)
        if (g.adjacent(v, u)) nb.push_back(c[u]);
      std::sort(nb.begin(), nb.end());
      return Sig{c[v], nb};
    };
    std::vector<Sig> sa, sb, all;
    for (std::size_t v = 0; v < a.n(); ++v) sa.push_back(sig(a, ca, v));
    for (std::size_t v = 0; v < b.n(); ++v) sb.push_back(sig(b, cb, v));
    all = sa;
    all.insert(all.end(), sb.begin(), sb.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto id = [&](const Sig& s) {
      return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), s) - all.begin());
    };
    std::vector<std::size_t> na(a.n()), nb(b.n());
    for (std::size_t v = 0; v < a.n(); ++v) na[v] = id(sa[v]);
    for (std::size_t v = 0; v < b.n(); ++v) nb[v] = id(sb[v]);
    bool stable = na == ca && nb == cb;
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  return {ca, cb};
}

inline bool iso_search(const LabeledGraph& a, const LabeledGraph& b,
                       const std::vector<std::size_t>& ca, const std::vector<std::size_t>& cb,
                       std::size_t v, std::vector<std::size_t>& map, std::vector<bool>& used) {
  if (v == a.n()) return true;
  for (std::size_t w = 0; w < b.n(); ++w) {
    if (used[w] || ca[v] != cb[w]) continue;
    bool ok = true;
    for (std::size_t u = 0; u < v && ok; ++u) ok = a.adjacent(v, u) == b.adjacent(w, map[u]);
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (iso_search(a, b, ca, cb, v + 1, map, used)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace detail

/// Witness permutation p with a.adjacent(u, v) == b.adjacent(p[u], p[v]), if any.
inline std::optional<std::vector<std::size_t>> are_isomorphic(const LabeledGraph& a,
                                                              const LabeledGraph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (a.degree_sequence() != b.degree_sequence()) return std::nullopt;
  auto [ca, cb] = detail::refine_colours(a, b);
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  std::vector<std::size_t> map(a.n(), 0);
  std::vector<bool> used(b.n(), false);
  if (detail::iso_search(a, b, ca, cb, 0, map, used)) return map;
  return std::nullopt;
}

inline bool is_bipartite(const LabeledGraph& g, const std::vector<std::size_t>& vertices) {
  std::vector<int> side(g.n(), -1);
  std::vector<bool> in(g.n(), false);
  for (auto v : vertices) in[v] = true;
  for (auto s : vertices) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < g.n(); ++u) {
        if (!in[u] || !g.adjacent(u, v)) continue;
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_bipartite(const LabeledGraph& g) {
  std::vector<std::size_t> all(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) all[i] = i;
  return is_bipartite(g, all);
}

/// True iff G has no two vertex-disjoint odd cycles. Exhaustive over the
/// 2^(n-1) vertex bipartitions, so intended for n <= 16.
inline bool odd_cycles_pairwise_intersect(const LabeledGraph& g) {
  const std::size_t n = g.n();
  if (n > 24) throw Error(ErrorKind::invalid_spec, "odd-cycle test is limited to 24 vertices");
  if (n < 6) return true;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<std::size_t> a{n - 1}, b;
    for (std::size_t v = 0; v + 1 < n; ++v) (mask >> v & 1u ? a : b).push_back(v);
    if (a.size() < 3 || b.size() < 3) continue;
    if (!is_bipartite(g, a) && !is_bipartite(g, b)) return false;
  }
  return true;
}

}  // namespace kdiam
