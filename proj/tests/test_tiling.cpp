#include <gtest/gtest.h>

#include "kdiam/construct.hpp"
#include "kdiam/tiling.hpp"

using namespace kdiam;
using Q = Rational;
using P = Point<Q>;

namespace {

Polytope<Q> unit_square() { return convex_hull(std::vector<P>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

std::vector<P> corners(std::size_t copies) {
  std::vector<P> out;
  for (const P& c : std::vector<P>{{0, 0}, {1, 0}, {1, 1}, {0, 1}})
    for (std::size_t i = 0; i < copies; ++i) out.push_back(c);
  return out;
}

Polytope<double> pentagon() { return convex_hull(regular_polygon(5)); }

std::vector<Point<double>> pentagon_vertices() {
  auto x = regular_polygon(5);
  return {x.points().begin(), x.points().end()};
}

}  // namespace

TEST(Packing, SquareCorners) {
  auto r = verify_k_fold_packing(unit_square(), corners(1), 2);
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.details.at("volume_ratio"), "1");
  EXPECT_EQ(r.details.at("volume_bound_holds"), "true");
}

TEST(Packing, SquareCornersDoubled) {
  auto r = verify_k_fold_packing(unit_square(), corners(2), 3);
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.details.at("volume_ratio"), "2");
  auto over = verify_k_fold_packing(unit_square(), corners(2), 2);
  EXPECT_FALSE(over.verdict);
  EXPECT_EQ(over.witness.size(), 2u);
}

TEST(Packing, PentagonVertices) {
  // Total piece area is 5/4 of the body, so adjacent pieces must overlap.
  auto two = verify_k_fold_packing(pentagon(), pentagon_vertices(), 2);
  EXPECT_FALSE(two.verdict);
  EXPECT_EQ(two.details.at("volume_bound_holds"), "false");
  EXPECT_EQ(two.witness, (std::vector<std::size_t>{0, 1}));
  EXPECT_NEAR(std::stod(two.details.at("volume_ratio")), 1.25, 1e-9);
  auto three = verify_k_fold_packing(pentagon(), pentagon_vertices(), 3);
  EXPECT_TRUE(three.verdict);
  EXPECT_EQ(three.details.at("volume_bound_holds"), "true");
}

TEST(Packing, CountBoundOnPassingInstances) {
  for (std::size_t k = 2; k <= 4; ++k) {
    auto cs = corners(k - 1);
    auto r = verify_k_fold_packing(unit_square(), cs, k);
    ASSERT_TRUE(r.verdict);
    EXPECT_LE(cs.size(), (k - 1) * 4);
  }
}

TEST(Packing, PieceOutsideBodyThrows) {
  std::vector<P> cs{{2, 2}};
  try {
    verify_k_fold_packing(unit_square(), cs, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_instance);
  }
}

TEST(Tiling, SquareCorners) {
  auto r = verify_multiple_tiling(TilingInstance<Q>{unit_square(), corners(1), 2});
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.has_flag("sampled"));
  EXPECT_EQ(r.details.at("samples_failed"), "0");
  EXPECT_TRUE(verify_multiple_tiling(TilingInstance<Q>{unit_square(), corners(2), 3}).verdict);
}

TEST(Tiling, PentagonFailsVolumeIdentity) {
  auto r = verify_multiple_tiling(TilingInstance<double>{pentagon(), pentagon_vertices(), 3});
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.details.at("volume_identity"), "false");
}

TEST(Tiling, TooFewSamplesRejected) {
  EXPECT_THROW(verify_multiple_tiling(TilingInstance<Q>{unit_square(), corners(1), 2, 10}), Error);
}

TEST(CubeExtremal, UnitAndShearedCubes) {
  EXPECT_TRUE(verify_cube_extremal(cube_config(2, 3), 3).verdict);
  std::vector<P> sheared;
  for (const auto& p : cube_config(2, 3)) sheared.push_back(P{p[0] + 2 * p[1], 3 * p[1]});
  EXPECT_TRUE(verify_cube_extremal(PointConfiguration<Q>(2, sheared), 3).verdict);
  EXPECT_TRUE(verify_cube_extremal(cube_config(3, 2), 2).verdict);
}

TEST(CubeExtremal, CubeConfigTiles) {
  for (std::size_t k = 2; k <= 3; ++k) {
    auto x = cube_config(2, k);
    std::vector<P> cs(x.points().begin(), x.points().end());
    EXPECT_TRUE(verify_multiple_tiling(TilingInstance<Q>{convex_hull(x), cs, k}).verdict);
  }
}

TEST(CubeExtremal, HexagonPlusTwoBoundaryPoints) {
  auto hex = regular_polygon(6);
  std::vector<Point<double>> pts(hex.points().begin(), hex.points().end());
  pts.push_back(0.5 * (pts[0] + pts[1]));
  pts.push_back(0.5 * (pts[3] + pts[4]));
  auto r = verify_cube_extremal(PointConfiguration<double>(2, pts), 3);
  EXPECT_FALSE(r.verdict);
  EXPECT_TRUE(r.has_flag("not_applicable"));
  EXPECT_EQ(r.witness.size(), 3u);
}
