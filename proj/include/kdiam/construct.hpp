#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kdiam/catalog.hpp"
#include "kdiam/point.hpp"

namespace kdiam {

using AnyConfiguration = std::variant<PointConfiguration<Rational>, PointConfiguration<double>>;

/// Each point repeated m times in place: x0 x0 .. x1 x1 ..
template <Scalar T>
PointConfiguration<T> multiplicity_lift(const PointConfiguration<T>& x, std::size_t m) {
  if (m < 1) throw Error(ErrorKind::invalid_spec, "multiplicity must be at least 1");
  std::vector<Point<T>> pts;
  for (const auto& p : x)
    for (std::size_t i = 0; i < m; ++i) pts.push_back(p);
  return PointConfiguration<T>(x.dim(), std::move(pts));
}

/// Vertices of {0,1}^d in binary order, each with multiplicity k-1.
inline PointConfiguration<Rational> cube_config(std::size_t d, std::size_t k) {
  if (d < 1 || k < 2) throw Error(ErrorKind::invalid_spec, "cube_config needs d >= 1 and k >= 2");
  std::vector<Point<Rational>> pts;
  for (std::size_t m = 0; m < (std::size_t(1) << d); ++m) {
    Point<Rational> p(d);
    for (std::size_t a = 0; a < d; ++a) p[a] = Rational(static_cast<long>(m >> a & 1));
    pts.push_back(p);
  }
  return multiplicity_lift(PointConfiguration<Rational>(d, std::move(pts)), k - 1);
}

/// Standard basis e_1..e_{d+1} of R^{d+1}: a regular d-simplex with squared edge 2.
inline PointConfiguration<Rational> standard_simplex(std::size_t d) {
  if (d < 1) throw Error(ErrorKind::invalid_spec, "simplex dimension must be at least 1");
  std::vector<Point<Rational>> pts;
  for (std::size_t i = 0; i <= d; ++i) {
    Point<Rational> p(d + 1);
    p[i] = 1;
    pts.push_back(p);
  }
  return PointConfiguration<Rational>(d + 1, std::move(pts));
}

inline PointConfiguration<Rational> simplex_double(std::size_t d) {
  return multiplicity_lift(standard_simplex(d), 2);
}

/// m points on the unit circle at angles 2 pi j / m.
inline PointConfiguration<double> regular_polygon(std::size_t m) {
  if (m < 3) throw Error(ErrorKind::invalid_spec, "a polygon needs at least 3 vertices");
  std::vector<Point<double>> pts;
  for (std::size_t j = 0; j < m; ++j) {
    double a = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
    pts.push_back(Point<double>{std::cos(a), std::sin(a)});
  }
  return PointConfiguration<double>(2, std::move(pts));
}

namespace detail {

template <Scalar T>
PointConfiguration<T> points_on_sides(const std::vector<Point<T>>& corners, const std::vector<std::size_t>& counts) {
  std::vector<Point<T>> pts;
  const std::size_t n = corners.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = corners[i];
    const auto& b = corners[(i + 1) % n];
    // Side i holds counts[i] points including both corners; each corner is
    // emitted once, as the start of its side.
    for (std::size_t j = 0; j + 1 < counts[i]; ++j) {
      T t = T(static_cast<long>(j)) / T(static_cast<long>(counts[i] - 1));
      pts.push_back(a + t * (b - a));
    }
  }
  return PointConfiguration<T>(2, std::move(pts));
}

}  // namespace detail

/// Boundary points of a regular 2s-gon with counts[i] evenly spaced points on
/// side i, both corners included. Opposite sides must carry equal counts. The
/// square (s = 2) is the exact axis-aligned unit square; larger s use floats.
inline AnyConfiguration sided_polygon(const std::vector<std::size_t>& counts) {
  if (counts.size() < 4 || counts.size() % 2 != 0)
    throw Error(ErrorKind::invalid_spec, "side counts must have even length of at least 4");
  const std::size_t s = counts.size() / 2;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 2) throw Error(ErrorKind::invalid_spec, "every side holds at least its two corners");
    if (counts[i] != counts[(i + s) % counts.size()])
      throw Error(ErrorKind::invalid_spec, "opposite sides must carry equal point counts");
  }
  if (s == 2) {
    std::vector<Point<Rational>> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    return detail::points_on_sides(sq, counts);
  }
  std::vector<Point<double>> corners;
  for (std::size_t j = 0; j < 2 * s; ++j) {
    double a = std::numbers::pi * static_cast<double>(2 * j + 1) / static_cast<double>(2 * s);
    corners.push_back(Point<double>{std::cos(a), std::sin(a)});
  }
  return detail::points_on_sides(corners, counts);
}

/// Total point count of sided_polygon(counts).
inline std::size_t sided_polygon_size(const std::vector<std::size_t>& counts) {
  std::size_t total = 0;
  for (auto c : counts) total += c - 1;
  return total;
}

/// `times` iterations of X -> X x {0} followed by X x {1}.
template <Scalar T>
PointConfiguration<T> prism_lift(const PointConfiguration<T>& x, std::size_t times) {
  PointConfiguration<T> cur = x;
  for (std::size_t t = 0; t < times; ++t) {
    std::vector<Point<T>> pts;
    for (long layer = 0; layer < 2; ++layer)
      for (const auto& p : cur) {
        std::vector<T> c(p.coords().begin(), p.coords().end());
        c.push_back(T(layer));
        pts.emplace_back(std::move(c));
      }
    cur = PointConfiguration<T>(cur.dim() + 1, std::move(pts));
  }
  return cur;
}

/// k 2^{d-1} boundary points of the unit d-cube: a 2k-point square
/// configuration with side counts (a, b, a, b), a + b = k + 2, prism-lifted d-2 times.
inline PointConfiguration<Rational> cube_norm_config(std::size_t d, std::size_t k) {
  if (d < 2 || k < 2) throw Error(ErrorKind::invalid_spec, "cube_norm_config needs d >= 2 and k >= 2");
  std::size_t a = (k + 2) / 2, b = k + 2 - a;
  auto sq = std::get<PointConfiguration<Rational>>(sided_polygon({a, b, a, b}));
  return prism_lift(sq, d - 2);
}

namespace detail {

using P3 = Point<double>;

inline double norm3(const P3& v) { return std::sqrt(dot(v, v)); }
inline P3 unit3(const P3& v) { return (1.0 / norm3(v)) * v; }
inline P3 cross3(const P3& a, const P3& b) {
  return P3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Rotation of p about the line through a with unit direction u (Rodrigues).
inline P3 rotate_about(const P3& p, const P3& a, const P3& u, double angle) {
  P3 v = p - a;
  double c = std::cos(angle), s = std::sin(angle);
  return a + (c * v + s * cross3(u, v) + ((1 - c) * dot(u, v)) * u);
}

// Root of f on [lo, hi] where f changes sign, by bisection to machine precision.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Point of the great arc from a to b on the unit sphere about c, parameter s in [0, 1].
inline P3 sphere_arc(const P3& c, const P3& a, const P3& b, double s) {
  return c + unit3((1 - s) * a + s * b - c);
}

}  // namespace detail

/// Regular (2k-1)-gon of circumradius 1 in z = 0 plus the apex (0, 0, h) at the
/// polygon's diameter from every vertex.
inline PointConfiguration<double> odd_gon_with_apex(std::size_t k) {
  if (k < 3) throw Error(ErrorKind::invalid_spec, "odd_gon_with_apex needs k >= 3");
  auto poly = regular_polygon(2 * k - 1);
  double diam = 0;
  for (const auto& p : poly)
    for (const auto& q : poly) diam = std::max(diam, detail::norm3(Point<double>{p[0] - q[0], p[1] - q[1], 0}));
  std::vector<Point<double>> pts;
  for (const auto& p : poly) pts.push_back(Point<double>{p[0], p[1], 0});
  pts.push_back(Point<double>{0, 0, std::sqrt(diam * diam - 1)});
  return PointConfiguration<double>(3, std::move(pts));
}

/// The pentagon-plus-apex configuration with one or two spokes removed.
///
/// A rim vertex v is rotated about the line through its two diagonal partners,
/// which keeps both diameter edges at v, until its distance to the apex is 99%
/// of the diameter. For two spokes, v0 and then its diagonal partner v2 are moved.
inline PointConfiguration<double> pentagon_apex_perturbed(std::size_t spokes_removed) {
  if (spokes_removed != 1 && spokes_removed != 2)
    throw Error(ErrorKind::invalid_spec, "pentagon_apex_perturbed removes one or two spokes");
  using detail::P3;
  auto base = odd_gon_with_apex(3);
  std::vector<P3> v(base.points().begin(), base.points().end());
  const P3 apex = v[5];
  const double diam = detail::norm3(v[0] - v[2]);
  auto move = [&](std::size_t i) {
    const P3 a = v[(i + 2) % 5], b = v[(i + 3) % 5];
    const P3 u = detail::unit3(b - a);
    // Pick the rotation sense that lifts v toward the apex.
    double sense = detail::rotate_about(v[i], a, u, 1e-3)[2] > v[i][2] ? 1.0 : -1.0;
    auto f = [&](double t) { return detail::norm3(detail::rotate_about(v[i], a, u, sense * t) - apex) - 0.99 * diam; };
    double t = detail::bisect(f, 0.0, 0.5);
    v[i] = detail::rotate_about(v[i], a, u, sense * t);
  };
  move(0);
  if (spokes_removed == 2) move(2);
  return PointConfiguration<double>(3, std::move(v));
}

/// Vertices of a unit-edge regular tetrahedron: p1 p2 and p3 p4 are opposite
/// edges parallel to the x and y axes, centred on the z axis.
inline std::vector<Point<double>> unit_tetrahedron() {
  const double h = std::sqrt(2.0) / 4;
  return {{0.5, 0, -h}, {-0.5, 0, -h}, {0, 0.5, h}, {0, -0.5, h}};
}

/// Midpoints of the two arcs of the ball-tetrahedron joining p1 p2 and p3 p4.
/// The first lies on the spheres about p3 and p4, the second on those about p1 and p2.
inline std::pair<Point<double>, Point<double>> ball_tetrahedron_arc_midpoints() {
  auto t = unit_tetrahedron();
  // On the z axis at unit distance from p3 (and by symmetry p4): z = h - sqrt(1 - 1/4).
  const double drop = std::sqrt(1.0 - 0.25);
  return {Point<double>{0, 0, t[2][2] - drop}, Point<double>{0, 0, t[0][2] + drop}};
}

/// Unit tetrahedron plus two points at unit distance on the segment joining the
/// arc midpoints, centred. Diameter graph K4 plus a disjoint edge.
inline PointConfiguration<double> ball_tetrahedron_segment() {
  auto pts = unit_tetrahedron();
  auto [m, mp] = ball_tetrahedron_arc_midpoints();
  Point<double> c = 0.5 * (m + mp);
  Point<double> dir = detail::unit3(mp - m);
  pts.push_back(c - 0.5 * dir);
  pts.push_back(c + 0.5 * dir);
  return PointConfiguration<double>(3, std::move(pts));
}

/// Variants of the ball-tetrahedron configuration realizing the remaining
/// K4-plus-edge diameter graphs. Points are named by `variant` ("2-b".."2-e"):
///   2-b: x on the sphere about p3 just inside the ball about p4, y on segment x m' at distance 1;
///   2-c: x at the arc midpoint m, y one unit above it;
///   2-d: x as in 2-b, y on the sphere about p1 between m' and p2 at distance 1 from x;
///   2-e: y = m', x on the sphere about p3 between m and p4 at distance 1 from y.
inline PointConfiguration<double> ball_tetrahedron_variant(const std::string& variant) {
  using detail::P3;
  auto pts = unit_tetrahedron();
  auto [m, mp] = ball_tetrahedron_arc_midpoints();
  const P3 &p1 = pts[0], &p2 = pts[1], &p3 = pts[2], &p4 = pts[3];
  const double step = 0.05;
  P3 x(3), y(3);
  if (variant == "2-a") {
    return ball_tetrahedron_segment();
  } else if (variant == "2-b") {
    x = detail::sphere_arc(p3, m, p4, step);
    y = x + detail::unit3(mp - x);
  } else if (variant == "2-c") {
    x = m;
    y = m + P3{0, 0, 1};
  } else if (variant == "2-d") {
    x = detail::sphere_arc(p3, m, p4, step);
    double s = detail::bisect([&](double t) { return detail::norm3(detail::sphere_arc(p1, mp, p2, t) - x) - 1; }, 0.0, 1.0);
    y = detail::sphere_arc(p1, mp, p2, s);
  } else if (variant == "2-e") {
    y = mp;
    double s = detail::bisect([&](double t) { return detail::norm3(detail::sphere_arc(p3, m, p4, t) - y) - 1; }, 0.0, 1.0);
    x = detail::sphere_arc(p3, m, p4, s);
  } else {
    throw Error(ErrorKind::invalid_spec, "unknown ball-tetrahedron variant " + variant);
  }
  pts.push_back(x);
  pts.push_back(y);
  return PointConfiguration<double>(3, std::move(pts));
}

/// Seven-point planar unit-distance graph with eleven edges: two rhombi made of
/// unit equilateral triangles share the origin and are rotated so their far tips
/// are one unit apart.
inline PointConfiguration<double> moser_spindle() {
  const double r3 = std::sqrt(3.0);
  const double theta = 2 * std::asin(1 / (2 * r3));
  const double six = std::numbers::pi / 6;
  std::vector<Point<double>> pts{{0, 0}};
  for (double phi : {0.0, theta}) {
    pts.push_back(Point<double>{std::cos(phi - six), std::sin(phi - six)});
    pts.push_back(Point<double>{std::cos(phi + six), std::sin(phi + six)});
    pts.push_back(Point<double>{r3 * std::cos(phi), r3 * std::sin(phi)});
  }
  return PointConfiguration<double>(2, std::move(pts));
}

/// A 6-point configuration in Euclidean 3-space realizing a catalog graph.
struct Realization {
  std::string name;
  PointConfiguration<double> points;
};

inline std::vector<Realization> classification_realizations() {
  std::vector<Realization> out;
  out.push_back({"1-a", odd_gon_with_apex(3)});
  out.push_back({"1-b", pentagon_apex_perturbed(1)});
  out.push_back({"1-c", pentagon_apex_perturbed(2)});
  for (const char* v : {"2-a", "2-b", "2-c", "2-d", "2-e"}) out.push_back({v, ball_tetrahedron_variant(v)});
  return out;
}

}  // namespace kdiam
