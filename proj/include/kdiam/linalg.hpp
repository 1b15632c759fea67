#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "kdiam/point.hpp"

namespace kdiam {

template <Scalar T>
using Matrix = std::vector<std::vector<T>>;

/// Reduced row echelon form in place. Returns the pivot column of each nonzero row.
/// Float entries below `tol.rel * scale` are treated as zero.
template <Scalar T>
std::vector<std::size_t> row_reduce(Matrix<T>& m, const Tolerance& tol = {}, double scale = 1.0) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    if constexpr (ScalarTraits<T>::exact) {
      for (std::size_t i = r; i < rows; ++i)
        if (m[i][c] != 0) {
          best = i;
          break;
        }
    } else {
      double bv = 0;
      for (std::size_t i = r; i < rows; ++i)
        if (std::fabs(m[i][c]) > bv) {
          bv = std::fabs(m[i][c]);
          best = i;
        }
      if (bv <= tol.rel * std::max(1.0, scale)) best = rows;
    }
    if (best == rows) continue;
    std::swap(m[r], m[best]);
    T inv = T(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      T f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      if constexpr (!ScalarTraits<T>::exact) m[i][c] = 0;
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

template <Scalar T>
T determinant(Matrix<T> m) {
  const std::size_t n = m.size();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    if constexpr (ScalarTraits<T>::exact) {
      for (std::size_t i = c; i < n; ++i)
        if (m[i][c] != 0) {
          best = i;
          break;
        }
    } else {
      double bv = 0;
      for (std::size_t i = c; i < n; ++i)
        if (std::fabs(m[i][c]) > bv) {
          bv = std::fabs(m[i][c]);
          best = i;
        }
      if (bv == 0) best = n;
    }
    if (best == n) return T(0);
    if (best != c) {
      std::swap(m[c], m[best]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      T f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

/// Vector orthogonal to the rows of a (m-1) x m matrix, given by signed cofactors.
/// n . w equals det[rows; w]; n is zero exactly when the rows are dependent.
template <Scalar T>
std::vector<T> cofactor_normal(const Matrix<T>& rows) {
  const std::size_t m = rows.size() + 1;
  std::vector<T> n(m);
  for (std::size_t c = 0; c < m; ++c) {
    Matrix<T> minor(rows.size(), std::vector<T>(m - 1));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0, jj = 0; j < m; ++j)
        if (j != c) minor[i][jj++] = rows[i][j];
    T d = determinant(std::move(minor));
    n[c] = ((c + m - 1) % 2 == 0) ? d : T(-d);
  }
  return n;
}

/// Affine hull of a point list, with an exact affine chart onto R^m.
///
/// The chart is the projection of `p - base` onto the pivot coordinates of the
/// reduced direction basis; it is injective on the hull, so convexity,
/// supporting hyperplanes and volume ratios carry over unchanged.
template <Scalar T>
struct AffineHull {
  std::size_t ambient_dim = 0;
  Point<T> base;
  Matrix<T> basis;  // reduced rows spanning the direction space
  std::vector<std::size_t> pivots;
  // normal . y == offset for every y in the hull
  std::vector<std::pair<std::vector<T>, T>> equalities;

  std::size_t dim() const { return pivots.size(); }

  Point<T> chart(const Point<T>& p) const {
    Point<T> z(pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r) z[r] = p[pivots[r]] - base[pivots[r]];
    return z;
  }

  /// Direction vector (no base offset) in chart coordinates.
  Point<T> chart_vector(const Point<T>& v) const {
    Point<T> z(pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r) z[r] = v[pivots[r]];
    return z;
  }

  Point<T> unchart(const Point<T>& z) const {
    Point<T> p = base;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t a = 0; a < ambient_dim; ++a) p[a] += z[r] * basis[r][a];
    return p;
  }

  /// Ambient covector agreeing with chart covector `a` on the direction space.
  std::vector<T> lift_covector(std::span<const T> a) const {
    std::vector<T> n(ambient_dim, T(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) n[pivots[r]] = a[r];
    return n;
  }

  bool contains(const Point<T>& p, const Tolerance& tol = {}) const {
    for (const auto& [n, off] : equalities)
      if (sign_of<T>(dot<T>(n, p.coords()) - off, tol, magnitude(p) + 1.0) != 0) return false;
    return true;
  }

  bool contains_direction(const Point<T>& v, const Tolerance& tol = {}) const {
    for (const auto& eq : equalities)
      if (sign_of<T>(dot<T>(eq.first, v.coords()), tol, magnitude(v) + 1.0) != 0) return false;
    return true;
  }
};

template <Scalar T>
AffineHull<T> affine_hull(std::span<const Point<T>> pts, const Tolerance& tol = {}) {
  if (pts.empty()) throw Error(ErrorKind::invalid_spec, "affine hull of an empty set");
  AffineHull<T> h;
  h.ambient_dim = pts.front().dim();
  h.base = pts.front();
  double scale = 0;
  for (const auto& p : pts) scale = std::max(scale, magnitude(p));
  Matrix<T> m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    auto diff = pts[i] - h.base;
    m.emplace_back(diff.coords().begin(), diff.coords().end());
  }
  h.pivots = row_reduce(m, tol, scale);
  h.basis = std::move(m);
  std::vector<bool> is_pivot(h.ambient_dim, false);
  for (auto p : h.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < h.ambient_dim; ++c) {
    if (is_pivot[c]) continue;
    std::vector<T> n(h.ambient_dim, T(0));
    n[c] = T(1);
    for (std::size_t r = 0; r < h.pivots.size(); ++r) n[h.pivots[r]] = -h.basis[r][c];
    T off = dot<T>(n, h.base.coords());
    h.equalities.emplace_back(std::move(n), std::move(off));
  }
  return h;
}

template <Scalar T>
AffineHull<T> affine_hull(const std::vector<Point<T>>& pts, const Tolerance& tol = {}) {
  return affine_hull<T>(std::span<const Point<T>>(pts), tol);
}

}  // namespace kdiam
