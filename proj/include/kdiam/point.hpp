#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kdiam/errors.hpp"
#include "kdiam/scalar.hpp"

namespace kdiam {

/// A point (or vector) of R^d with coordinates in T.
template <Scalar T>
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim) : coords_(dim, T(0)) {}
  explicit Point(std::vector<T> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<T> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const T& operator[](std::size_t i) const { return coords_[i]; }
  T& operator[](std::size_t i) { return coords_[i]; }
  std::span<const T> coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  friend Point operator-(const Point& a, const Point& b) {
    check_dims(a, b);
    Point r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
  }
  friend Point operator+(const Point& a, const Point& b) {
    check_dims(a, b);
    Point r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend Point operator*(const T& s, const Point& a) {
    Point r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = s * a[i];
    return r;
  }
  Point operator-() const {
    Point r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = -coords_[i];
    return r;
  }

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }

 private:
  static void check_dims(const Point& a, const Point& b) {
    if (a.dim() != b.dim())
      throw Error(ErrorKind::dimension_mismatch,
                  "points of dimension " + std::to_string(a.dim()) + " and " +
                      std::to_string(b.dim()));
  }

  std::vector<T> coords_;
};

template <Scalar T>
T dot(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::dimension_mismatch, "dot product size mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <Scalar T>
T dot(const Point<T>& a, const Point<T>& b) {
  return dot<T>(a.coords(), b.coords());
}

/// Largest absolute coordinate, as a double. Used to scale float tolerances.
template <Scalar T>
double magnitude(const Point<T>& p) {
  double m = 0;
  for (const auto& c : p.coords()) m = std::max(m, std::fabs(to_double(c)));
  return m;
}

template <Scalar To, Scalar From>
Point<To> point_cast(const Point<From>& p) {
  std::vector<To> c;
  c.reserve(p.dim());
  for (const auto& x : p.coords()) c.push_back(scalar_cast<To>(x));
  return Point<To>(std::move(c));
}

/// Ordered, labeled list of points in R^d. Repeated points are allowed.
template <Scalar T>
class PointConfiguration {
 public:
  using scalar_type = T;

  PointConfiguration() = default;
  PointConfiguration(std::size_t dim, std::vector<Point<T>> points)
      : dim_(dim), points_(std::move(points)) {
    if (dim_ == 0) throw Error(ErrorKind::invalid_spec, "configuration dimension must be positive");
    if (points_.empty()) throw Error(ErrorKind::invalid_spec, "configuration must contain a point");
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (points_[i].dim() != dim_)
        throw Error(ErrorKind::dimension_mismatch,
                    "point " + std::to_string(i) + " has dimension " +
                        std::to_string(points_[i].dim()) + ", expected " + std::to_string(dim_));
    // GMP arithmetic assumes canonical rationals; values built as mpq_class(4, 2) are not.
    if constexpr (ScalarTraits<T>::exact)
      for (auto& p : points_)
        for (std::size_t a = 0; a < dim_; ++a) p[a].canonicalize();
  }
  explicit PointConfiguration(std::vector<Point<T>> points)
      : PointConfiguration(points.empty() ? 0 : points.front().dim(), std::move(points)) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const Point<T>& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point<T>>& points() const { return points_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Point<T>> points_;
};

template <Scalar To, Scalar From>
PointConfiguration<To> configuration_cast(const PointConfiguration<From>& x) {
  std::vector<Point<To>> pts;
  pts.reserve(x.size());
  for (const auto& p : x) pts.push_back(point_cast<To>(p));
  return PointConfiguration<To>(x.dim(), std::move(pts));
}

/// Distinct point values of `x` in first-occurrence order, plus the class of each index.
template <Scalar T>
struct DistinctPoints {
  std::vector<Point<T>> values;
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> multiplicity;
};

template <Scalar T>
DistinctPoints<T> distinct_points(const PointConfiguration<T>& x, const Tolerance& tol = {}) {
  DistinctPoints<T> out;
  out.class_of.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t found = out.values.size();
    for (std::size_t c = 0; c < out.values.size(); ++c) {
      bool same = true;
      for (std::size_t a = 0; a < x.dim() && same; ++a)
        same = sign_of<T>(x[i][a] - out.values[c][a], tol, magnitude(x[i])) == 0;
      if (same) {
        found = c;
        break;
      }
    }
    if (found == out.values.size()) {
      out.values.push_back(x[i]);
      out.multiplicity.push_back(0);
    }
    out.class_of[i] = found;
    ++out.multiplicity[found];
  }
  return out;
}

}  // namespace kdiam
