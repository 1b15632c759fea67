#pragma once

#include <string>
#include <vector>

#include "kdiam/graph.hpp"

namespace kdiam {

inline LabeledGraph cycle_graph(std::size_t n) {
  LabeledGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline LabeledGraph complete_graph(std::size_t n) {
  LabeledGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// Rim cycle 0..rim-1 plus hub `rim` joined to every rim vertex.
inline LabeledGraph wheel_graph(std::size_t rim) {
  LabeledGraph g = cycle_graph(rim);
  LabeledGraph w(rim + 1);
  for (auto [a, b] : g.edges()) w.add_edge(a, b);
  for (std::size_t i = 0; i < rim; ++i) w.add_edge(i, rim);
  return w;
}

/// Edge graph of a quadrangle-based pyramid: 4-cycle plus an apex on all four.
inline LabeledGraph pyramid_graph() { return wheel_graph(4); }

inline LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b) {
  LabeledGraph g(a.n() + b.n());
  for (auto [i, j] : a.edges()) g.add_edge(i, j);
  for (auto [i, j] : b.edges()) g.add_edge(a.n() + i, a.n() + j);
  return g;
}

inline LabeledGraph remove_edges(const LabeledGraph& g,
                                 std::initializer_list<std::pair<std::size_t, std::size_t>> drop) {
  LabeledGraph out(g.n(), g.kind());
  for (auto [a, b] : g.edges()) {
    bool skip = false;
    for (auto [x, y] : drop) skip = skip || (x == a && y == b) || (x == b && y == a);
    if (!skip) out.add_edge(a, b);
  }
  return out;
}

struct CatalogEntry {
  std::string name;
  std::string description;
  LabeledGraph graph;
};

/// K4 on 0..3 plus the segment 4-5, with extra cross edges.
inline LabeledGraph k4_plus_segment(std::initializer_list<std::pair<std::size_t, std::size_t>> cross) {
  LabeledGraph g(6);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) g.add_edge(i, j);
  g.add_edge(4, 5);
  for (auto [a, b] : cross) g.add_edge(a, b);
  return g;
}

/// The eight diameter graphs of 6-point 3-diametral sets in Euclidean 3-space.
///
/// (1-a)..(1-c) are the wheel W5 with zero, one, or two consecutive spokes
/// removed. (2-a) is K4 plus a disjoint edge; (2-b)..(2-e) add one to three
/// cross edges between the K4 and the segment. The K4 members are reconstructed
/// by exhaustive enumeration (see search.hpp) and each is realized by a
/// construction in construct.hpp.
inline std::vector<CatalogEntry> classification_catalog() {
  const std::size_t hub = 5;
  return {
      {"1-a", "wheel W5", wheel_graph(5)},
      {"1-b", "W5 minus one spoke", remove_edges(wheel_graph(5), {{0, hub}})},
      {"1-c", "W5 minus two consecutive spokes", remove_edges(wheel_graph(5), {{0, hub}, {1, hub}})},
      {"2-a", "K4 plus a disjoint edge", k4_plus_segment({})},
      {"2-b", "K4 + edge, one cross edge", k4_plus_segment({{4, 0}})},
      {"2-c", "K4 + edge, two cross edges at one endpoint", k4_plus_segment({{4, 0}, {4, 1}})},
      {"2-d", "K4 + edge, one cross edge at each endpoint", k4_plus_segment({{4, 0}, {5, 1}})},
      {"2-e", "K4 + edge, three cross edges", k4_plus_segment({{4, 0}, {4, 1}, {5, 2}})},
  };
}

/// Name of the catalog member isomorphic to g, or empty.
inline std::string catalog_name(const LabeledGraph& g) {
  for (const auto& e : classification_catalog())
    if (are_isomorphic(g, e.graph)) return e.name;
  return {};
}

}  // namespace kdiam
