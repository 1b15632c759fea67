#include <gtest/gtest.h>

#include <random>

#include "kdiam/catalog.hpp"
#include "kdiam/configuration_graph.hpp"

using namespace kdiam;
using Q = Rational;
using P = Point<Q>;

namespace {

PointConfiguration<Q> config(std::vector<P> pts) {
  auto d = pts.front().dim();
  return PointConfiguration<Q>(d, std::move(pts));
}

PointConfiguration<Q> unit_square() { return config({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

LabeledGraph relabel(const LabeledGraph& g, const std::vector<std::size_t>& perm) {
  LabeledGraph h(g.n());
  for (auto [a, b] : g.edges()) h.add_edge(perm[a], perm[b]);
  return h;
}

LabeledGraph complete_bipartite(std::size_t a, std::size_t b) {
  LabeledGraph g(a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

}  // namespace

TEST(BuildGraph, SquareDiagonals) {
  auto g = diameter_graph(unit_square(), Norm<Q>::euclidean());
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_TRUE(g.adjacent(1, 3));
  EXPECT_EQ(g.diameter_key(), "2");
  EXPECT_EQ(g.kind(), GraphKind::diameter);
}

TEST(BuildGraph, PentagonIsFiveCycle) {
  std::vector<Point<double>> pts;
  for (int j = 0; j < 5; ++j) pts.push_back({std::cos(2 * M_PI * j / 5), std::sin(2 * M_PI * j / 5)});
  auto g = diameter_graph(PointConfiguration<double>(2, pts), Norm<double>::euclidean());
  EXPECT_EQ(g.edge_count(), 5u);
  for (int j = 0; j < 5; ++j) EXPECT_TRUE(g.adjacent(j, (j + 2) % 5));
  EXPECT_TRUE(are_isomorphic(g, cycle_graph(5)).has_value());
}

TEST(BuildGraph, SquareAntipodalIsComplete) {
  auto g = antipodal_graph(unit_square());
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g.kind(), GraphKind::antipodal);
  EXPECT_EQ(g.edges(), antipodal_graph_by_gauge(unit_square()).edges());
}

TEST(BuildGraph, ZeroDiameterThrows) {
  auto x = config({{1, 1}, {1, 1}});
  try {
    diameter_graph(x, Norm<Q>::euclidean());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degenerate_configuration);
  }
}

TEST(BuildGraph, DuplicatesNeverAdjacentInDiameterGraph) {
  auto x = config({{0, 0}, {0, 0}, {2, 1}, {2, 1}});
  auto g = diameter_graph(x, Norm<Q>::euclidean());
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(2, 3));
  EXPECT_EQ(g.edge_count(), 4u);
}

TEST(BuildGraph, UnitDistance) {
  auto g = unit_distance_graph(unit_square(), Norm<Q>::euclidean());
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_FALSE(g.adjacent(0, 2));
  auto linf = unit_distance_graph(unit_square(), Norm<Q>::linf());
  EXPECT_EQ(linf.edge_count(), 6u);
}

TEST(IndependentSet, Examples) {
  EXPECT_FALSE(find_independent_set(cycle_graph(5), 3).has_value());
  EXPECT_FALSE(find_independent_set(disjoint_union(complete_graph(4), complete_graph(2)), 3).has_value());
  auto s = find_independent_set(cycle_graph(7), 3);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_EQ(independence_number(cycle_graph(7)), 3u);
  EXPECT_EQ(independence_number(complete_graph(5)), 1u);
}

TEST(IndependentSet, MonotoneInK) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 3 + rng() % 8;
    LabeledGraph g(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng() % 2) g.add_edge(a, b);
    for (std::size_t k = 1; k < n; ++k)
      if (!find_independent_set(g, k)) {
        EXPECT_FALSE(find_independent_set(g, k + 1).has_value());
      }
    auto alpha = independence_number(g);
    EXPECT_TRUE(find_independent_set(g, alpha).has_value());
    EXPECT_FALSE(find_independent_set(g, alpha + 1).has_value());
  }
}

TEST(Subgraph, Pyramid) {
  auto pyr = pyramid_graph();
  auto self = contains_subgraph(pyr, wheel_graph(4));
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(contains_subgraph(pyr, complete_graph(5)).has_value());
  EXPECT_FALSE(contains_subgraph(pyr, wheel_graph(5)).has_value());
}

TEST(Subgraph, EmbeddingPreservesEdges) {
  auto pyr = pyramid_graph();
  auto g = complete_graph(6);
  auto m = contains_subgraph(pyr, g);
  ASSERT_TRUE(m.has_value());
  for (auto [a, b] : pyr.edges()) EXPECT_TRUE(g.adjacent((*m)[a], (*m)[b]));
}

TEST(Isomorphism, Examples) {
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), complete_bipartite(3, 3)).has_value());
  auto w = wheel_graph(5);
  auto r = relabel(w, {3, 5, 0, 4, 1, 2});
  auto perm = are_isomorphic(w, r);
  ASSERT_TRUE(perm.has_value());
  for (auto [a, b] : w.edges()) EXPECT_TRUE(r.adjacent((*perm)[a], (*perm)[b]));
  EXPECT_FALSE(are_isomorphic(disjoint_union(complete_graph(4), complete_graph(2)),
                              remove_edges(wheel_graph(5), {{0, 5}, {1, 5}}))
                   .has_value());
}

TEST(OddCycles, Examples) {
  EXPECT_TRUE(odd_cycles_pairwise_intersect(disjoint_union(complete_graph(4), complete_graph(2))));
  EXPECT_FALSE(odd_cycles_pairwise_intersect(disjoint_union(complete_graph(3), complete_graph(3))));
  EXPECT_TRUE(odd_cycles_pairwise_intersect(wheel_graph(5)));
  EXPECT_TRUE(odd_cycles_pairwise_intersect(cycle_graph(6)));
}

TEST(Catalog, EightPairwiseDistinctMembers) {
  auto cat = classification_catalog();
  ASSERT_EQ(cat.size(), 8u);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    EXPECT_EQ(cat[i].graph.n(), 6u);
    EXPECT_FALSE(find_independent_set(cat[i].graph, 3).has_value()) << cat[i].name;
    EXPECT_EQ(catalog_name(cat[i].graph), cat[i].name);
    for (std::size_t j = i + 1; j < cat.size(); ++j)
      EXPECT_FALSE(are_isomorphic(cat[i].graph, cat[j].graph).has_value()) << cat[i].name << " " << cat[j].name;
  }
}

TEST(DiameterGraphProperty, RandomSpatialConfigurations) {
  std::mt19937_64 rng(2024);
  const auto pyr = pyramid_graph();
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 2 + rng() % 7;
    std::vector<P> pts;
    for (std::size_t i = 0; i < n; ++i)
      pts.push_back(P{Q(long(rng() % 7), 1 + long(rng() % 3)), Q(long(rng() % 7), 1 + long(rng() % 3)),
                      Q(long(rng() % 7), 1 + long(rng() % 3))});
    PointConfiguration<Q> x(3, pts);
    if (distinct_points(x).values.size() < 2) continue;
    auto g = diameter_graph(x, Norm<Q>::euclidean());
    EXPECT_FALSE(contains_subgraph(pyr, g).has_value());
    EXPECT_TRUE(odd_cycles_pairwise_intersect(g));
  }
}

TEST(Antipodal, LpAgreesWithGauge) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 60; ++t) {
    std::size_t d = 2 + rng() % 2, n = 2 + rng() % 6;
    std::vector<P> pts;
    for (std::size_t i = 0; i < n; ++i) {
      P p(d);
      for (std::size_t a = 0; a < d; ++a) p[a] = Q(long(rng() % 5));
      pts.push_back(p);
    }
    PointConfiguration<Q> x(d, pts);
    if (distinct_points(x).values.size() < 2) continue;
    EXPECT_EQ(antipodal_graph(x).edges(), antipodal_graph_by_gauge(x).edges());
  }
}
