#pragma once

#include <memory>
#include <string>
#include <variant>

#include "kdiam/polytope.hpp"

namespace kdiam {

enum class NormKind { euclidean, linf, l1, gauge };

inline const char* to_string(NormKind k) {
  switch (k) {
    case NormKind::euclidean: return "euclidean";
    case NormKind::linf: return "linf";
    case NormKind::l1: return "l1";
    case NormKind::gauge: return "gauge";
  }
  return "unknown";
}

/// Gauge (Minkowski functional) of an origin-symmetric polytope at x:
/// max over facets of (normal . x) / offset.
template <Scalar T>
T gauge_norm(const Polytope<T>& body, const Point<T>& x, const Tolerance& tol = {}) {
  if (x.dim() != body.dim())
    throw Error(ErrorKind::dimension_mismatch, "gauge argument has the wrong dimension");
  if (!body.is_norm_body(tol))
    throw Error(ErrorKind::invalid_body, "gauge body must be origin-symmetric with interior origin");
  if (!body.affine().contains_direction(x, tol))
    throw Error(ErrorKind::dimension_mismatch, "vector lies outside the span of the gauge body");
  T best(0);
  for (const auto& f : body.facets()) {
    T v = dot<T>(f.normal, x.coords()) / f.offset;
    if (best < v) best = v;
  }
  return best;
}

/// A norm on R^d. Gauge bodies are validated once, at construction.
template <Scalar T>
class Norm {
 public:
  static Norm euclidean() { return Norm(NormKind::euclidean); }
  static Norm linf() { return Norm(NormKind::linf); }
  static Norm l1() { return Norm(NormKind::l1); }
  static Norm gauge(Polytope<T> body, const Tolerance& tol = {}) {
    if (!body.is_norm_body(tol))
      throw Error(ErrorKind::invalid_body, "gauge body must be origin-symmetric with interior origin");
    Norm n(NormKind::gauge);
    n.body_ = std::make_shared<const Polytope<T>>(std::move(body));
    return n;
  }

  NormKind kind() const { return kind_; }
  const Polytope<T>& body() const { return *body_; }
  std::string name() const { return to_string(kind_); }

  /// Key comparing equal iff the distances are equal: the squared distance for
  /// the Euclidean norm, the distance itself otherwise. Exact for rational input.
  T distance_key(const Point<T>& x, const Point<T>& y, const Tolerance& tol = {}) const {
    auto v = x - y;
    switch (kind_) {
      case NormKind::euclidean: return dot(v, v);
      case NormKind::linf: {
        T m(0);
        for (const auto& c : v.coords())
          if (m < ScalarTraits<T>::abs(c)) m = ScalarTraits<T>::abs(c);
        return m;
      }
      case NormKind::l1: {
        T s(0);
        for (const auto& c : v.coords()) s += ScalarTraits<T>::abs(c);
        return s;
      }
      case NormKind::gauge: {
        if (v.is_zero()) return T(0);
        if (!body_->affine().contains_direction(v, tol))
          throw Error(ErrorKind::dimension_mismatch, "difference lies outside the gauge body's span");
        T best(0);
        for (const auto& f : body_->facets()) {
          T val = dot<T>(f.normal, v.coords()) / f.offset;
          if (best < val) best = val;
        }
        return best;
      }
    }
    return T(0);
  }

  /// Key value that corresponds to distance one.
  T unit_key() const { return T(1); }

 private:
  explicit Norm(NormKind k) : kind_(k) {}

  NormKind kind_;
  std::shared_ptr<const Polytope<T>> body_;
};

template <Scalar T>
T distance_key(const Norm<T>& norm, const Point<T>& x, const Point<T>& y, const Tolerance& tol = {}) {
  return norm.distance_key(x, y, tol);
}

template <Scalar T>
bool keys_equal(const T& a, const T& b, const Tolerance& tol = {}) {
  return scalar_equal(a, b, tol);
}

}  // namespace kdiam
