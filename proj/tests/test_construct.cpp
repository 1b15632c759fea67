#include <gtest/gtest.h>

#include <functional>

#include "kdiam/construct.hpp"
#include "kdiam/tiling.hpp"
#include "kdiam/verify.hpp"

using namespace kdiam;
using Q = Rational;

namespace {

enum class Prop { diametral, antipodal, equidistant };

struct Row {
  std::string name;
  std::function<AnyConfiguration()> make;
  Prop prop;
  std::string norm;
  std::size_t k;
  std::size_t count;
  std::string graph;  // catalog name of the diameter graph, or empty
};

template <Scalar T>
Norm<T> norm_named(const std::string& n) {
  if (n == "linf") return Norm<T>::linf();
  return Norm<T>::euclidean();
}

template <Scalar T>
bool check(const PointConfiguration<T>& x, const Row& r) {
  switch (r.prop) {
    case Prop::diametral: return is_k_diametral(x, norm_named<T>(r.norm), r.k).verdict;
    case Prop::antipodal: return is_k_antipodal(x, r.k).verdict;
    case Prop::equidistant: return is_k_equidistant(x, norm_named<T>(r.norm), r.k).verdict;
  }
  return false;
}

std::vector<Row> table() {
  std::vector<Row> rows{
      {"cube 2 2", [] { return cube_config(2, 2); }, Prop::diametral, "linf", 2, 4, ""},
      {"cube 3 3", [] { return cube_config(3, 3); }, Prop::diametral, "linf", 3, 16, ""},
      {"cube 2 4 antipodal", [] { return cube_config(2, 4); }, Prop::antipodal, "", 4, 12, ""},
      {"lift triangle", [] { return multiplicity_lift(standard_simplex(2), 2); }, Prop::diametral, "euclidean", 3, 6, ""},
      {"lift tetrahedron", [] { return multiplicity_lift(standard_simplex(3), 2); }, Prop::diametral, "euclidean", 3, 8, ""},
      {"simplex double 2", [] { return simplex_double(2); }, Prop::diametral, "euclidean", 3, 6, ""},
      {"simplex double 3", [] { return simplex_double(3); }, Prop::diametral, "euclidean", 3, 8, ""},
      {"simplex double 5", [] { return simplex_double(5); }, Prop::diametral, "euclidean", 3, 12, ""},
      {"pentagon", [] { return regular_polygon(5); }, Prop::diametral, "euclidean", 3, 5, ""},
      {"heptagon", [] { return regular_polygon(7); }, Prop::diametral, "euclidean", 4, 7, ""},
      {"hexagon", [] { return regular_polygon(6); }, Prop::antipodal, "", 3, 6, ""},
      {"square 3333", [] { return sided_polygon({3, 3, 3, 3}); }, Prop::antipodal, "", 4, 8, ""},
      {"square 2222", [] { return sided_polygon({2, 2, 2, 2}); }, Prop::antipodal, "", 2, 4, ""},
      {"hexagon 222222", [] { return sided_polygon({2, 2, 2, 2, 2, 2}); }, Prop::antipodal, "", 3, 6, ""},
      {"hexagon 322322", [] { return sided_polygon({3, 2, 2, 3, 2, 2}); }, Prop::antipodal, "", 4, 8, ""},
      {"hexagon prism", [] { return prism_lift(regular_polygon(6), 1); }, Prop::antipodal, "", 3, 12, ""},
      {"hexagon prism twice", [] { return prism_lift(regular_polygon(6), 2); }, Prop::antipodal, "", 3, 24, ""},
      {"cube norm 2 3", [] { return cube_norm_config(2, 3); }, Prop::diametral, "linf", 3, 6, ""},
      {"cube norm 3 4", [] { return cube_norm_config(3, 4); }, Prop::diametral, "linf", 4, 16, ""},
      {"odd gon apex 3", [] { return odd_gon_with_apex(3); }, Prop::diametral, "euclidean", 3, 6, "1-a"},
      {"odd gon apex 4", [] { return odd_gon_with_apex(4); }, Prop::diametral, "euclidean", 4, 8, ""},
      {"odd gon apex 5", [] { return odd_gon_with_apex(5); }, Prop::diametral, "euclidean", 5, 10, ""},
      {"apex one spoke", [] { return pentagon_apex_perturbed(1); }, Prop::diametral, "euclidean", 3, 6, "1-b"},
      {"apex two spokes", [] { return pentagon_apex_perturbed(2); }, Prop::diametral, "euclidean", 3, 6, "1-c"},
      {"ball tetrahedron", [] { return ball_tetrahedron_segment(); }, Prop::diametral, "euclidean", 3, 6, "2-a"},
      {"moser spindle", [] { return moser_spindle(); }, Prop::equidistant, "euclidean", 3, 7, ""},
  };
  for (const char* v : {"2-b", "2-c", "2-d", "2-e"})
    rows.push_back({std::string("variant ") + v, [v] { return ball_tetrahedron_variant(v); }, Prop::diametral,
                    "euclidean", 3, 6, v});
  return rows;
}

}  // namespace

TEST(Constructions, TableDriven) {
  for (const auto& r : table()) {
    SCOPED_TRACE(r.name);
    auto x = r.make();
    std::visit(
        [&](const auto& c) {
          using T = typename std::decay_t<decltype(c)>::scalar_type;
          EXPECT_EQ(c.size(), r.count);
          EXPECT_TRUE(check(c, r));
          if (!r.graph.empty()) {
            auto g = diameter_graph(c, Norm<T>::euclidean());
            EXPECT_EQ(catalog_name(g), r.graph);
            EXPECT_EQ(distinct_points(c).values.size(), 6u);
          }
        },
        x);
  }
}

TEST(Constructions, CubeConfigCountsAndOrder) {
  auto x = cube_config(2, 3);
  ASSERT_EQ(x.size(), 8u);
  EXPECT_EQ(x[0], x[1]);
  EXPECT_NE(x[1], x[2]);
  EXPECT_EQ(multiplicity_lift(x, 1).size(), 8u);
}

TEST(Constructions, PrismLiftPreservesAntipodalityPerStep) {
  PointConfiguration<Q> cur = std::get<PointConfiguration<Q>>(sided_polygon({3, 2, 3, 2}));
  for (int step = 0; step < 2; ++step) {
    cur = prism_lift(cur, 1);
    EXPECT_TRUE(is_k_antipodal(cur, 3).verdict) << step;
  }
  EXPECT_EQ(cur.size(), 24u);
  auto cube = prism_lift(std::get<PointConfiguration<Q>>(sided_polygon({2, 2, 2, 2})), 1);
  EXPECT_TRUE(verify_cube_extremal(cube, 2).verdict);
}

TEST(Constructions, SidedPolygonValidation) {
  EXPECT_THROW(sided_polygon({2, 3, 3, 2}), Error);
  EXPECT_THROW(sided_polygon({2, 2, 2}), Error);
  EXPECT_THROW(sided_polygon({1, 1, 1, 1}), Error);
  EXPECT_EQ(sided_polygon_size({3, 2, 2, 3, 2, 2}), 8u);
}

TEST(Constructions, BallTetrahedronSegmentLength) {
  auto [m, mp] = ball_tetrahedron_arc_midpoints();
  double len = std::sqrt(dot(m - mp, m - mp));
  EXPECT_NEAR(len, std::sqrt(3.0) - std::sqrt(2.0) / 2, 1e-12);
  EXPECT_GT(len, 1.0);
  auto x = ball_tetrahedron_segment();
  EXPECT_NEAR(std::sqrt(dot(x[4] - x[5], x[4] - x[5])), 1.0, 1e-12);
}

TEST(Constructions, PerturbedApexDistance) {
  for (std::size_t s : {1u, 2u}) {
    auto x = pentagon_apex_perturbed(s);
    auto g = diameter_graph(x, Norm<double>::euclidean());
    EXPECT_EQ(independence_number(g), 2u);
    double diam = std::sqrt(diameter_key(x, Norm<double>::euclidean()));
    double apex = std::sqrt(dot(x[0] - x[5], x[0] - x[5]));
    EXPECT_NEAR(apex, 0.99 * diam, 1e-9);
  }
}

TEST(Constructions, RealizationsCoverCatalog) {
  auto rs = classification_realizations();
  ASSERT_EQ(rs.size(), 8u);
  for (const auto& r : rs) {
    auto g = diameter_graph(r.points, Norm<double>::euclidean());
    EXPECT_EQ(catalog_name(g), r.name);
    EXPECT_TRUE(is_k_diametral(r.points, Norm<double>::euclidean(), 3).verdict) << r.name;
  }
}

TEST(Constructions, InvalidParameters) {
  EXPECT_THROW(cube_config(0, 2), Error);
  EXPECT_THROW(cube_config(2, 1), Error);
  EXPECT_THROW(regular_polygon(2), Error);
  EXPECT_THROW(odd_gon_with_apex(2), Error);
  EXPECT_THROW(pentagon_apex_perturbed(3), Error);
  EXPECT_THROW(ball_tetrahedron_variant("3-a"), Error);
  EXPECT_THROW(multiplicity_lift(cube_config(1, 2), 0), Error);
}
