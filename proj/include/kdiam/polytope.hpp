#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <vector>

#include "kdiam/linalg.hpp"

namespace kdiam {

/// Half-space normal . y <= offset (or a hyperplane, when used as an equality).
template <Scalar T>
struct Facet {
  std::vector<T> normal;
  T offset = T(0);

  friend bool operator==(const Facet&, const Facet&) = default;
  friend bool operator<(const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

namespace detail {

// Rescale so comparisons between equal half-spaces are exact: primitive integer
// normals for rationals, unit max-norm for floats.
template <Scalar T>
void normalize_facet(Facet<T>& f) {
  if constexpr (ScalarTraits<T>::exact) {
    mpz_class l = 1, g = 0;
    for (const auto& c : f.normal) {
      if (c == 0) continue;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    for (auto& c : f.normal) {
      c *= l;
      if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    }
    f.offset *= l;
    if (g != 0 && g != 1) {
      Rational gq(g);
      for (auto& c : f.normal) c /= gq;
      f.offset /= gq;
    }
  } else {
    double m = 0;
    for (double c : f.normal) m = std::max(m, std::fabs(c));
    if (m == 0) return;
    for (double& c : f.normal) c /= m;
    f.offset /= m;
  }
}

template <Scalar T>
struct ChartHull {
  std::vector<Facet<T>> facets;                // in chart coordinates
  std::vector<std::vector<std::size_t>> tight;  // point indices on each facet
  std::vector<std::size_t> vertices;            // indices of extreme points
};

// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Cofactor normal of (m-1) x m double rows without heap allocation for m <= 8.
inline void double_cofactor_normal(const Matrix<double>& rows, std::vector<double>& out) {
  const std::size_t m = rows.size() + 1;
  if (m > 8) {
    out = cofactor_normal(rows);
    return;
  }
  double minor[8][8];
  for (std::size_t c = 0; c < m; ++c) {
    const std::size_t k = m - 1;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0, jj = 0; j < m; ++j)
        if (j != c) minor[i][jj++] = rows[i][j];
    double det = 1;
    for (std::size_t col = 0; col < k && det != 0; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < k; ++r)
        if (std::fabs(minor[r][col]) > std::fabs(minor[piv][col])) piv = r;
      if (minor[piv][col] == 0) {
        det = 0;
        break;
      }
      if (piv != col) {
        for (std::size_t j = 0; j < k; ++j) std::swap(minor[piv][j], minor[col][j]);
        det = -det;
      }
      det *= minor[col][col];
      for (std::size_t r = col + 1; r < k; ++r) {
        double f = minor[r][col] / minor[col][col];
        for (std::size_t j = col; j < k; ++j) minor[r][j] -= f * minor[col][j];
      }
    }
    out[c] = ((c + m - 1) % 2 == 0) ? det : -det;
  }
}

// Facets of the hull of full-dimensional points in R^m (m = pts[0].dim()).
// Every m-subset spanning a hyperplane is tested; a double-precision pass
// discards subsets that are clearly not supporting before the T-precision check.
template <Scalar T>
ChartHull<T> chart_hull(const std::vector<Point<T>>& pts, const Tolerance& tol) {
  ChartHull<T> out;
  const std::size_t n = pts.size();
  const std::size_t m = pts.front().dim();
  double scale = 0;
  for (const auto& p : pts) scale = std::max(scale, magnitude(p));
  scale = std::max(scale, 1e-300);

  if (m == 0) {
    out.vertices = {0};
    return out;
  }
  if (m == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[hi][0] < pts[i][0]) hi = i;
    }
    Facet<T> up{{T(1)}, pts[hi][0]}, down{{T(-1)}, T(-pts[lo][0])};
    out.facets = {up, down};
    out.tight = {{hi}, {lo}};
    out.vertices = {std::min(lo, hi), std::max(lo, hi)};
    for (std::size_t i = 0; i < n; ++i) {
      if (i != hi && sign_of<T>(pts[i][0] - pts[hi][0], tol, scale) == 0) out.tight[0].push_back(i);
      if (i != lo && sign_of<T>(pts[i][0] - pts[lo][0], tol, scale) == 0) out.tight[1].push_back(i);
    }
    return out;
  }

  std::vector<std::vector<double>> shadow(n, std::vector<double>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) shadow[i][a] = to_double(pts[i][a]);

  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> tight_bits;
  std::vector<std::vector<bool>> tight_mask;
  Matrix<double> drows(m - 1, std::vector<double>(m));
  std::vector<double> dn(m);
  Matrix<T> rows(m - 1, std::vector<T>(m));
  const double degenerate_level = 1e-9 * std::pow(2 * scale, static_cast<double>(m - 1));
  const double normal_scale = std::pow(scale, static_cast<double>(m - 1));

  for_each_combination(n, m, [&](std::span<const std::size_t> sub) {
    const auto& z0 = shadow[sub[0]];
    for (std::size_t r = 1; r < m; ++r)
      for (std::size_t a = 0; a < m; ++a) drows[r - 1][a] = shadow[sub[r]][a] - z0[a];
    double_cofactor_normal(drows, dn);
    double nmax = 0;
    for (double c : dn) nmax = std::max(nmax, std::fabs(c));
    if (nmax > degenerate_level) {
      const double eps = 1e-7 * nmax * scale;
      bool pos = false, neg = false;
      for (std::size_t i = 0; i < n && !(pos && neg); ++i) {
        double v = 0;
        for (std::size_t a = 0; a < m; ++a) v += dn[a] * (shadow[i][a] - z0[a]);
        pos = pos || v > eps;
        neg = neg || v < -eps;
      }
      if (pos && neg) return;
    } else if constexpr (!ScalarTraits<T>::exact) {
      return;
    }
    for (const auto& bits : tight_bits) {
      bool all = true;
      for (auto i : sub) all = all && (bits[i / 64] >> (i % 64) & 1);
      if (all) return;  // hyperplane already known
    }

    for (std::size_t r = 1; r < m; ++r)
      for (std::size_t a = 0; a < m; ++a) rows[r - 1][a] = pts[sub[r]][a] - pts[sub[0]][a];
    Facet<T> f;
    f.normal = cofactor_normal(rows);
    bool zero = true;
    for (const auto& c : f.normal) zero = zero && sign_of<T>(c, tol, normal_scale) == 0;
    if (zero) return;
    f.offset = dot<T>(f.normal, pts[sub[0]].coords());
    detail::normalize_facet(f);
    bool pos = false, neg = false;
    std::vector<bool> mask(n, false);
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < n; ++i) {
      int s = sign_of<T>(dot<T>(f.normal, pts[i].coords()) - f.offset, tol, scale);
      pos = pos || s > 0;
      neg = neg || s < 0;
      if (s == 0) {
        mask[i] = true;
        on.push_back(i);
      }
    }
    if (pos && neg) return;
    if (pos) {
      for (auto& c : f.normal) c = -c;
      f.offset = -f.offset;
    }
    std::vector<std::uint64_t> bits(words, 0);
    for (auto i : on) bits[i / 64] |= std::uint64_t(1) << (i % 64);
    tight_bits.push_back(std::move(bits));
    tight_mask.push_back(std::move(mask));
    out.facets.push_back(std::move(f));
    out.tight.push_back(std::move(on));
  });

  // A point is extreme iff the normals of its tight facets span R^m.
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<T> normals;
    for (std::size_t f = 0; f < out.facets.size(); ++f)
      if (tight_mask[f][i]) normals.push_back(out.facets[f].normal);
    if (normals.size() < m) continue;
    if (row_reduce(normals, tol).size() == m) out.vertices.push_back(i);
  }
  return out;
}

}  // namespace detail

/// Convex polytope with both V- and H-representation.
///
/// Facets are stored as normal . y <= offset in ambient coordinates and are
/// valid on the affine hull, which is recorded separately as equalities.
/// Vertices are sorted lexicographically, facets by (normal, offset).
template <Scalar T>
class Polytope {
 public:
  Polytope() = default;
  Polytope(AffineHull<T> aff, std::vector<Point<T>> vertices, std::vector<Facet<T>> facets)
      : aff_(std::move(aff)), vertices_(std::move(vertices)), facets_(std::move(facets)) {}

  std::size_t dim() const { return aff_.ambient_dim; }
  std::size_t affine_dim() const { return aff_.dim(); }
  const std::vector<Point<T>>& vertices() const { return vertices_; }
  const std::vector<Facet<T>>& facets() const { return facets_; }
  const std::vector<std::pair<std::vector<T>, T>>& equalities() const { return aff_.equalities; }
  const AffineHull<T>& affine() const { return aff_; }
  bool full_dimensional() const { return affine_dim() == dim(); }

  bool contains(const Point<T>& y, const Tolerance& tol = {}) const {
    if (!aff_.contains(y, tol)) return false;
    for (const auto& f : facets_)
      if (sign_of<T>(dot<T>(f.normal, y.coords()) - f.offset, tol, magnitude(y) + 1.0) > 0)
        return false;
    return true;
  }

  /// Strictly inside every facet (relative interior).
  bool contains_in_interior(const Point<T>& y, const Tolerance& tol = {}) const {
    if (!aff_.contains(y, tol)) return false;
    for (const auto& f : facets_)
      if (sign_of<T>(dot<T>(f.normal, y.coords()) - f.offset, tol, magnitude(y) + 1.0) >= 0)
        return false;
    return true;
  }

  /// Vertex set closed under negation and the origin strictly inside every facet.
  bool is_norm_body(const Tolerance& tol = {}) const {
    if (affine_dim() == 0) return false;
    for (const auto& f : facets_)
      if (sign_of<T>(f.offset, tol) <= 0) return false;
    for (const auto& v : vertices_) {
      auto neg = -v;
      bool found = false;
      for (const auto& w : vertices_) {
        bool same = true;
        for (std::size_t a = 0; a < v.dim() && same; ++a)
          same = sign_of<T>(w[a] - neg[a], tol, magnitude(v)) == 0;
        if (same) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

 private:
  AffineHull<T> aff_;
  std::vector<Point<T>> vertices_;
  std::vector<Facet<T>> facets_;
};

template <Scalar T>
Polytope<T> convex_hull(std::span<const Point<T>> points, const Tolerance& tol = {}) {
  if (points.empty()) throw Error(ErrorKind::invalid_spec, "convex hull of an empty point list");
  const std::size_t d = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != d) throw Error(ErrorKind::dimension_mismatch, "hull points differ in dimension");

  auto aff = affine_hull<T>(points, tol);
  std::vector<Point<T>> chart;
  std::vector<const Point<T>*> original;
  for (const auto& p : points) {
    auto z = aff.chart(p);
    bool dup = false;
    for (const auto& q : chart) {
      bool same = true;
      for (std::size_t a = 0; a < z.dim() && same; ++a)
        same = sign_of<T>(z[a] - q[a], tol, magnitude(z)) == 0;
      if (same) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      chart.push_back(std::move(z));
      original.push_back(&p);
    }
  }

  auto core = detail::chart_hull(chart, tol);
  std::vector<Point<T>> vertices;
  for (auto i : core.vertices) vertices.push_back(*original[i]);
  std::sort(vertices.begin(), vertices.end());

  std::vector<Facet<T>> facets;
  for (auto& f : core.facets) {
    Facet<T> amb;
    amb.normal = aff.lift_covector(f.normal);
    // chart(y) = proj(y) - proj(base)
    amb.offset = f.offset + dot<T>(amb.normal, aff.base.coords());
    facets.push_back(std::move(amb));
  }
  std::sort(facets.begin(), facets.end());
  return Polytope<T>(std::move(aff), std::move(vertices), std::move(facets));
}

template <Scalar T>
Polytope<T> convex_hull(const std::vector<Point<T>>& points, const Tolerance& tol = {}) {
  return convex_hull<T>(std::span<const Point<T>>(points), tol);
}

template <Scalar T>
Polytope<T> convex_hull(const PointConfiguration<T>& x, const Tolerance& tol = {}) {
  return convex_hull<T>(x.points(), tol);
}

/// conv(X) - conv(X): the hull of differences of hull vertices.
template <Scalar T>
Polytope<T> difference_body(const PointConfiguration<T>& x, const Tolerance& tol = {}) {
  auto hull = convex_hull(x, tol);
  if (hull.affine_dim() == 0)
    throw Error(ErrorKind::degenerate_configuration,
                "difference body needs at least two distinct points");
  const auto& v = hull.vertices();
  std::vector<Point<T>> diffs;
  diffs.reserve(v.size() * (v.size() - 1));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (i != j) diffs.push_back(v[i] - v[j]);
  return convex_hull<T>(diffs, tol);
}

namespace detail {

// Pulling triangulation of the points `idx` (chart coordinates of a common
// full-dimensional space). Each simplex is a list of point indices.
template <Scalar T>
void triangulate(const std::vector<Point<T>>& pts, const std::vector<std::size_t>& idx,
                 const Tolerance& tol, std::vector<std::vector<std::size_t>>& out,
                 std::vector<std::size_t>& prefix) {
  std::vector<Point<T>> sub;
  for (auto i : idx) sub.push_back(pts[i]);
  auto aff = affine_hull<T>(sub, tol);
  if (aff.dim() == 0) {
    out.push_back(prefix);
    out.back().push_back(idx.front());
    return;
  }
  std::vector<Point<T>> local;
  for (const auto& p : sub) local.push_back(aff.chart(p));
  auto core = chart_hull(local, tol);
  const std::size_t apex = core.vertices.front();
  prefix.push_back(idx[apex]);
  for (std::size_t f = 0; f < core.facets.size(); ++f) {
    const auto& t = core.tight[f];
    if (std::find(t.begin(), t.end(), apex) != t.end()) continue;
    std::vector<std::size_t> face;
    for (auto i : t) face.push_back(idx[i]);
    triangulate(pts, face, tol, out, prefix);
  }
  prefix.pop_back();
}

}  // namespace detail

/// d-dimensional volume; zero unless the polytope is full-dimensional.
template <Scalar T>
T polytope_volume(const Polytope<T>& p, const Tolerance& tol = {}) {
  if (!p.full_dimensional()) return T(0);
  const std::size_t d = p.dim();
  const auto& v = p.vertices();
  std::vector<std::size_t> all(v.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> simplices;
  std::vector<std::size_t> prefix;
  detail::triangulate(v, all, tol, simplices, prefix);
  T total(0);
  for (const auto& s : simplices) {
    Matrix<T> m(d, std::vector<T>(d));
    for (std::size_t r = 1; r <= d; ++r)
      for (std::size_t a = 0; a < d; ++a) m[r - 1][a] = v[s[r]][a] - v[s[0]][a];
    T det = determinant(std::move(m));
    total += ScalarTraits<T>::abs(det);
  }
  T fact(1);
  for (std::size_t i = 2; i <= d; ++i) fact *= T(static_cast<long>(i));
  return total / fact;
}

/// x + ratio (P - x).
template <Scalar T>
Polytope<T> homothet(const Polytope<T>& p, const Point<T>& center, const T& ratio,
                     const Tolerance& tol = {}) {
  std::vector<Point<T>> pts;
  for (const auto& v : p.vertices()) pts.push_back(center + ratio * (v - center));
  return convex_hull<T>(pts, tol);
}

}  // namespace kdiam
