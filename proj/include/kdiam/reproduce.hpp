#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "kdiam/construct.hpp"
#include "kdiam/search.hpp"
#include "kdiam/tiling.hpp"

namespace kdiam {

/// One row of the acceptance table.
struct AcceptanceRow {
  int id = 0;
  std::string claim;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

// Collects failures; a row passes when no check failed.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += !ok;
  }
  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ - failed_ << "/" << checks_ << " checks";
    for (const auto& f : failures_) s << "; failed: " << f;
    return s.str();
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

inline std::string tag(std::initializer_list<std::pair<const char*, long>> kv) {
  std::string s;
  for (auto [k, v] : kv) s += (s.empty() ? "" : " ") + std::string(k) + "=" + std::to_string(v);
  return s;
}

template <Scalar T>
TilingInstance<T> self_tiling(const PointConfiguration<T>& x, std::size_t k, std::uint64_t seed) {
  return TilingInstance<T>{convex_hull(x), x.points(), k, 1000, seed};
}

// Random rational p/q with 1 <= q <= 7 in [-10, 10].
inline Rational random_rational(std::mt19937_64& rng) {
  long q = std::uniform_int_distribution<long>(1, 7)(rng);
  long p = std::uniform_int_distribution<long>(-10 * q, 10 * q)(rng);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace detail

/// Random rational configuration used by the equivalence sweep. Roughly one in
/// five instances repeats a point and one in five lies in a hyperplane.
inline PointConfiguration<Rational> random_equivalence_instance(std::mt19937_64& rng) {
  std::size_t d = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
  std::size_t n = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
  int flavour = std::uniform_int_distribution<int>(0, 4)(rng);
  std::vector<Point<Rational>> pts;
  for (std::size_t i = 0; i < n; ++i) {
    Point<Rational> p(d);
    for (std::size_t a = 0; a < d; ++a) p[a] = detail::random_rational(rng);
    if (flavour == 1) p[d - 1] = p[0] - p[1];  // all points on one hyperplane
    pts.push_back(p);
  }
  if (flavour == 0 && n >= 3) pts[n - 1] = pts[0];
  // Guarantee two distinct points.
  if (std::all_of(pts.begin(), pts.end(), [&](const auto& p) { return p == pts[0]; })) pts[0][0] += 1;
  return PointConfiguration<Rational>(d, std::move(pts));
}

/// Distinct random points of the integer grid {0..3}^3, 2 to 8 of them.
inline PointConfiguration<Rational> random_grid_instance(std::mt19937_64& rng) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
  std::vector<Point<Rational>> pts;
  std::uniform_int_distribution<long> c(0, 3);
  while (pts.size() < n) {
    Point<Rational> p{Rational(c(rng)), Rational(c(rng)), Rational(c(rng))};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return PointConfiguration<Rational>(3, std::move(pts));
}

inline AcceptanceRow acceptance_cube_extremal() {
  detail::Checker c;
  const auto linf = Norm<Rational>::linf();
  for (std::size_t d : {2, 3, 4})
    for (std::size_t k : {2, 3, 4}) {
      auto t = detail::tag({{"d", long(d)}, {"k", long(k)}});
      auto x = cube_config(d, k);
      c.expect(x.size() == (k - 1) << d, t + " count");
      c.expect(is_k_diametral(x, linf, k).verdict, t + " k-diametral under linf");
      c.expect(is_k_antipodal(x, k).verdict, t + " k-antipodal");
      c.expect(verify_cube_extremal(x, k).verdict, t + " cube extremal");
      c.expect(verify_multiple_tiling(detail::self_tiling(x, k, 1000 + d * 10 + k)).verdict, t + " (k-1)-tiling");
    }
  return {1, "cube vertices with multiplicity k-1 are extremal k-diametral sets", c.passed(), c.summary()};
}

inline AcceptanceRow acceptance_equivalence(std::size_t instances = 200) {
  detail::Checker c;
  std::mt19937_64 rng(20240611);
  std::size_t lower = 0, dup = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    auto x = random_equivalence_instance(rng);
    std::size_t k = 2 + i % 3;
    auto r = check_antipodal_gauge_equivalence(x, k);
    lower += r.has_flag("lower_dimensional");
    dup += distinct_points(x).values.size() < x.size();
    c.expect(r.verdict && r.details["edge_sets_equal"] == "true", "instance " + std::to_string(i));
  }
  auto s = c.summary() + " (" + std::to_string(lower) + " lower-dimensional, " + std::to_string(dup) +
           " with repeated points)";
  return {2, "k-antipodal iff k-diametral under the difference-body gauge", c.passed(), s};
}

inline AcceptanceRow acceptance_planar_antipodal() {
  detail::Checker c;
  std::vector<std::vector<std::size_t>> specs{
      {2, 2, 2, 2}, {2, 2, 2, 2, 2, 2}, {3, 3, 3, 3}, {2, 3, 2, 3},       {3, 2, 2, 3, 2, 2},
      {2, 2, 2, 2, 2, 2, 2, 2}, {3, 4, 3, 4}, {2, 3, 3, 2, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2}};
  std::set<std::size_t> covered;
  for (const auto& counts : specs) {
    std::size_t n = sided_polygon_size(counts), k = n / 2;
    std::string t = "sides=" + std::to_string(counts.size()) + " n=" + std::to_string(n);
    auto x = sided_polygon(counts);
    bool ok = std::visit([&](const auto& cfg) { return cfg.size() == 2 * k && is_k_antipodal(cfg, k).verdict; }, x);
    c.expect(ok, t + " k-antipodal with 2k points");
    covered.insert(k);
  }
  for (std::size_t k = 2; k <= 5; ++k) c.expect(covered.count(k) == 1, "k=" + std::to_string(k) + " covered");
  for (std::size_t k : {2, 3}) {
    SearchProblem<double> p{regular_polygon(12), Norm<double>::euclidean(), k, SearchProperty::antipodal};
    auto r = max_k_antipodal_subset(p);
    c.expect(r.exhaustive && r.best_size == 2 * k, "12-gon search k=" + std::to_string(k) + " gave " + std::to_string(r.best_size));
  }
  return {3, "planar k-antipodal sets have 2k points, attained by parallel-sided polygons", c.passed(), c.summary()};
}

inline AcceptanceRow acceptance_planar_diametral() {
  detail::Checker c;
  const auto e = Norm<double>::euclidean();
  for (std::size_t k = 2; k <= 6; ++k) {
    auto x = regular_polygon(2 * k - 1);
    auto rep = is_k_diametral(x, e, k);
    auto g = diameter_graph(x, e);
    c.expect(rep.verdict, "(2k-1)-gon k-diametral k=" + std::to_string(k));
    c.expect(are_isomorphic(g, cycle_graph(2 * k - 1)).has_value(), "diameter graph is a cycle k=" + std::to_string(k));
  }
  for (std::size_t n = 3; n <= 13; ++n)
    for (std::size_t k : {2, 3, 4}) {
      SearchProblem<double> p{regular_polygon(n), e, k};
      auto r = max_k_diametral_subset(p);
      c.expect(r.exhaustive && r.best_size <= 2 * k - 1,
               detail::tag({{"N", long(n)}, {"k", long(k)}, {"best", long(r.best_size)}}));
    }
  return {4, "planar k-diametral sets have at most 2k-1 points, attained by the regular (2k-1)-gon", c.passed(),
          c.summary()};
}

inline AcceptanceRow acceptance_space_classification() {
  detail::Checker c;
  const auto e = Norm<double>::euclidean();
  std::set<std::string> names;
  for (const auto& r : classification_realizations()) {
    auto rep = is_k_diametral(r.points, e, 3);
    auto g = diameter_graph(r.points, e);
    auto name = catalog_name(g);
    c.expect(rep.verdict, r.name + " 3-diametral");
    c.expect(r.points.size() == 6 && distinct_points(r.points).values.size() == 6, r.name + " six distinct points");
    c.expect(name == r.name, r.name + " graph matches catalog (got '" + name + "')");
    names.insert(name);
  }
  c.expect(names.size() == classification_realizations().size(), "graphs pairwise distinct");
  c.expect(names.count("1-a") && names.count("2-a"), "wheel and K4 plus edge present");
  auto [m, mp] = ball_tetrahedron_arc_midpoints();
  double dist = std::sqrt(dot(m - mp, m - mp));
  c.expect(std::fabs(dist - (std::sqrt(3.0) - std::sqrt(2.0) / 2)) <= 1e-12, "arc midpoint distance");
  auto s = c.summary() + " (" + std::to_string(names.size()) + " realized graphs)";
  return {5, "six-point 3-diametral sets in 3-space and their diameter graphs", c.passed(), s};
}

inline AcceptanceRow acceptance_forbidden_pyramid(std::size_t instances = 1000) {
  detail::Checker c;
  std::mt19937_64 rng(31337);
  const auto pyr = pyramid_graph();
  const auto e = Norm<Rational>::euclidean();
  for (std::size_t i = 0; i < instances; ++i) {
    auto x = random_grid_instance(rng);
    auto g = diameter_graph(x, e);
    c.expect(!contains_subgraph(pyr, g).has_value(), "pyramid in instance " + std::to_string(i));
    c.expect(odd_cycles_pairwise_intersect(g), "disjoint odd cycles in instance " + std::to_string(i));
  }
  return {6, "3-space diameter graphs avoid the pyramid and have intersecting odd cycles", c.passed(), c.summary()};
}

inline AcceptanceRow acceptance_enumeration() {
  detail::Checker c;
  auto en = enumerate_candidate_diameter_graphs();
  auto has = [&](const LabeledGraph& g) {
    for (const auto& s : en.survivors)
      if (are_isomorphic(s, g)) return true;
    return false;
  };
  const std::size_t hub = 5;
  c.expect(has(wheel_graph(5)), "W5");
  c.expect(has(remove_edges(wheel_graph(5), {{0, hub}})), "W5 minus a spoke");
  c.expect(has(remove_edges(wheel_graph(5), {{0, hub}, {1, hub}})), "W5 minus two consecutive spokes");
  c.expect(has(disjoint_union(complete_graph(4), complete_graph(2))), "K4 plus a disjoint edge");
  c.expect(en.survivors.size() == 8, "count " + std::to_string(en.survivors.size()) + " != 8");
  std::ostringstream s;
  s << c.summary() << " (classes: " << en.classes_total << " total, " << en.independence_at_most_two
    << " with independence <= 2, " << en.odd_cycles_intersect << " with intersecting odd cycles, "
    << en.pyramid_free << " pyramid-free, " << en.survivors.size() << " surviving)";
  return {7, "candidate diameter graphs of 6-point 3-diametral sets", c.passed(), s.str()};
}

inline AcceptanceRow acceptance_cube_norm() {
  detail::Checker c;
  const auto linf = Norm<Rational>::linf();
  for (std::size_t d : {2, 3})
    for (std::size_t k : {2, 3, 4}) {
      auto x = cube_norm_config(d, k);
      auto t = detail::tag({{"d", long(d)}, {"k", long(k)}});
      c.expect(x.size() == k << (d - 1), t + " count");
      c.expect(distinct_points(x).values.size() == x.size(), t + " distinct");
      c.expect(is_k_diametral(x, linf, k).verdict, t + " k-diametral under linf");
    }
  std::vector<Point<Rational>> grid;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      if (i == 0 || i == 4 || j == 0 || j == 4) grid.push_back(Point<Rational>{Rational(i, 4), Rational(j, 4)});
  for (std::size_t k : {2, 3}) {
    SearchProblem<Rational> p{PointConfiguration<Rational>(2, grid), linf, k};
    auto r = max_k_diametral_subset(p);
    c.expect(r.exhaustive && r.best_size == 2 * k,
             "grid search k=" + std::to_string(k) + " gave " + std::to_string(r.best_size));
  }
  return {8, "k 2^(d-1) point k-diametral sets under the cube norm", c.passed(), c.summary()};
}

inline AcceptanceRow acceptance_lower_bounds() {
  detail::Checker c;
  const auto eq = Norm<Rational>::euclidean();
  for (std::size_t d : {2, 3})
    for (std::size_t k : {3, 4}) {
      auto x = multiplicity_lift(standard_simplex(d), k - 1);
      auto t = detail::tag({{"d", long(d)}, {"k", long(k)}});
      c.expect(x.size() == (k - 1) * (d + 1), t + " lifted simplex count");
      c.expect(is_k_diametral(x, eq, k).verdict, t + " lifted simplex k-diametral");
    }
  for (std::size_t d = 1; d <= 5; ++d) {
    auto x = simplex_double(d);
    c.expect(x.size() == 2 * d + 2 && is_k_diametral(x, eq, 3).verdict, "doubled simplex d=" + std::to_string(d));
  }
  for (std::size_t k : {3, 4, 5}) {
    auto x = odd_gon_with_apex(k);
    c.expect(x.size() == 2 * k && is_k_diametral(x, Norm<double>::euclidean(), k).verdict,
             "odd-gon with apex k=" + std::to_string(k));
  }
  return {9, "lower-bound constructions: lifted simplices, doubled simplices, odd-gon with apex", c.passed(),
          c.summary()};
}

inline AcceptanceRow acceptance_equidistant() {
  detail::Checker c;
  auto ms = moser_spindle();
  auto g = unit_distance_graph(ms, Norm<double>::euclidean());
  c.expect(ms.size() == 7, "spindle has 7 points");
  c.expect(g.edge_count() == 11, "spindle has 11 unit edges");
  c.expect(independence_number(g) == 2, "spindle independence number 2");
  c.expect(is_k_equidistant(ms, Norm<double>::euclidean(), 3).verdict, "spindle 3-equidistant");
  for (std::size_t d : {2, 3, 4})
    for (std::size_t k : {2, 3, 4}) {
      auto x = cube_config(d, k);
      c.expect(x.size() == (k - 1) << d && is_k_equidistant(x, Norm<Rational>::linf(), k).verdict,
               "unit cube " + detail::tag({{"d", long(d)}, {"k", long(k)}}) + " k-equidistant under linf");
    }
  return {10, "k-equidistant sets: Moser spindle and unit cubes under linf", c.passed(), c.summary()};
}

inline std::vector<std::function<AcceptanceRow()>> acceptance_suite() {
  return {acceptance_cube_extremal,
          [] { return acceptance_equivalence(); },
          acceptance_planar_antipodal,
          acceptance_planar_diametral,
          acceptance_space_classification,
          [] { return acceptance_forbidden_pyramid(); },
          acceptance_enumeration,
          acceptance_cube_norm,
          acceptance_lower_bounds,
          acceptance_equidistant};
}

/// Runs one row, timing it and turning exceptions into failures.
inline AcceptanceRow run_acceptance_row(const std::function<AcceptanceRow()>& f, int id) {
  auto t0 = std::chrono::steady_clock::now();
  AcceptanceRow row;
  try {
    row = f();
  } catch (const std::exception& e) {
    row.id = id;
    row.claim = "(error)";
    row.passed = false;
    row.detail = e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

}  // namespace kdiam
