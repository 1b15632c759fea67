#pragma once

#include <optional>
#include <vector>

#include "kdiam/lp.hpp"
#include "kdiam/polytope.hpp"

namespace kdiam {

/// Decides antipodality of index pairs of a configuration by LP feasibility.
///
/// Points i and j are antipodal when some u has u.x_i = max u.X, u.x_j = min u.X
/// and u.(x_i - x_j) > 0. The LP runs in the affine chart of X, so
/// lower-dimensional configurations are handled inside their own hull.
template <Scalar T>
class AntipodalityTester {
 public:
  explicit AntipodalityTester(const PointConfiguration<T>& x, const Tolerance& tol = {})
      : x_(x), tol_(tol), distinct_(distinct_points(x, tol)), aff_(affine_hull<T>(x.points(), tol)) {
    for (const auto& p : distinct_.values) chart_.push_back(aff_.chart(p));
    for (const auto& p : x_.points()) scale_ = std::max(scale_, magnitude(p));
    boundary_.assign(chart_.size(), false);
    if (aff_.dim() > 0) {
      auto hull = detail::chart_hull(chart_, tol_);
      vertices_ = hull.vertices;
      for (const auto& on : hull.tight)
        for (auto i : on) boundary_[i] = true;
    }
  }

  bool lower_dimensional() const { return aff_.dim() < x_.dim(); }
  std::size_t affine_dim() const { return aff_.dim(); }
  const DistinctPoints<T>& distinct() const { return distinct_; }

  /// Supporting direction u with u.(x_i - x_j) = 1, in ambient coordinates.
  std::optional<std::vector<T>> direction(std::size_t i, std::size_t j) const {
    if (i >= x_.size() || j >= x_.size())
      throw Error(ErrorKind::index_out_of_range, "antipodality index out of range");
    if (i == j) throw Error(ErrorKind::invalid_spec, "antipodality needs two different indices");
    auto u = class_direction(distinct_.class_of[i], distinct_.class_of[j]);
    if (!u) return std::nullopt;
    return aff_.lift_covector(*u);
  }

  bool antipodal(std::size_t i, std::size_t j) const { return direction(i, j).has_value(); }

  /// Same question for two distinct point classes, in chart coordinates.
  /// Points off the relative boundary support no hyperplane, and it suffices to
  /// compare against hull vertices.
  std::optional<std::vector<T>> class_direction(std::size_t ci, std::size_t cj) const {
    if (ci == cj || aff_.dim() == 0 || !boundary_[ci] || !boundary_[cj]) return std::nullopt;
    const std::size_t m = aff_.dim();
    LinearProgram<T> lp(m);
    auto row = [&](const Point<T>& a, const Point<T>& b) {
      std::vector<T> c(m);
      for (std::size_t r = 0; r < m; ++r) {
        c[r] = a[r] - b[r];
        if constexpr (!ScalarTraits<T>::exact)
          if (sign_of<T>(c[r], tol_, scale_) == 0) c[r] = 0;
      }
      return c;
    };
    const auto& zi = chart_[ci];
    const auto& zj = chart_[cj];
    for (auto l : vertices_) {
      if (l != ci) lp.add_row(row(zi, chart_[l]), RowSense::ge, T(0));
      if (l != cj) lp.add_row(row(chart_[l], zj), RowSense::ge, T(0));
    }
    lp.add_row(row(zi, zj), RowSense::eq, T(1));
    auto res = solve_lp(lp, tol_);
    if (res.status == LpStatus::infeasible) return std::nullopt;
    return res.x;
  }

 private:
  PointConfiguration<T> x_;
  Tolerance tol_;
  DistinctPoints<T> distinct_;
  AffineHull<T> aff_;
  std::vector<Point<T>> chart_;
  std::vector<std::size_t> vertices_;
  std::vector<bool> boundary_;
  double scale_ = 0;
};

template <Scalar T>
std::optional<std::vector<T>> separating_direction(const PointConfiguration<T>& x, std::size_t i,
                                                   std::size_t j, const Tolerance& tol = {}) {
  return AntipodalityTester<T>(x, tol).direction(i, j);
}

}  // namespace kdiam
