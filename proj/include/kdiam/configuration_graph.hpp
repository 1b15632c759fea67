#pragma once

#include "kdiam/antipodal.hpp"
#include "kdiam/graph.hpp"
#include "kdiam/norm.hpp"

namespace kdiam {

/// Largest pairwise distance key; zero for a single point.
template <Scalar T>
T diameter_key(const PointConfiguration<T>& x, const Norm<T>& norm, const Tolerance& tol = {}) {
  T best(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      T k = norm.distance_key(x[i], x[j], tol);
      if (best < k) best = k;
    }
  return best;
}

/// Pairs whose key equals `target` (within tolerance in float mode).
template <Scalar T>
LabeledGraph key_level_graph(const PointConfiguration<T>& x, const Norm<T>& norm, const T& target,
                             GraphKind kind, const Tolerance& tol = {}) {
  LabeledGraph g(x.size(), kind);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (keys_equal(norm.distance_key(x[i], x[j], tol), target, tol)) g.add_edge(i, j);
  return g;
}

template <Scalar T>
LabeledGraph diameter_graph(const PointConfiguration<T>& x, const Norm<T>& norm,
                            const Tolerance& tol = {}) {
  T diam = diameter_key(x, norm, tol);
  if (sign_of<T>(diam, tol) <= 0)
    throw Error(ErrorKind::degenerate_configuration, "diameter graph needs a positive diameter");
  auto g = key_level_graph(x, norm, diam, GraphKind::diameter, tol);
  g.set_diameter_key(format_scalar(diam));
  return g;
}

template <Scalar T>
LabeledGraph unit_distance_graph(const PointConfiguration<T>& x, const Norm<T>& norm,
                                 const Tolerance& tol = {}) {
  return key_level_graph(x, norm, norm.unit_key(), GraphKind::unit_distance, tol);
}

/// Antipodal graph by LP feasibility, one LP per pair of distinct point values.
template <Scalar T>
LabeledGraph antipodal_graph(const PointConfiguration<T>& x, const Tolerance& tol = {}) {
  AntipodalityTester<T> tester(x, tol);
  const auto& d = tester.distinct();
  const std::size_t c = d.values.size();
  std::vector<std::vector<bool>> anti(c, std::vector<bool>(c, false));
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = a + 1; b < c; ++b)
      anti[a][b] = anti[b][a] = tester.class_direction(a, b).has_value();
  LabeledGraph g(x.size(), GraphKind::antipodal);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (anti[d.class_of[i]][d.class_of[j]]) g.add_edge(i, j);
  return g;
}

/// Antipodal graph by the second route: pairs with gauge of conv(X) - conv(X) equal to one.
template <Scalar T>
LabeledGraph antipodal_graph_by_gauge(const PointConfiguration<T>& x, const Tolerance& tol = {}) {
  auto norm = Norm<T>::gauge(difference_body(x, tol), tol);
  auto g = key_level_graph(x, norm, T(1), GraphKind::antipodal, tol);
  g.set_diameter_key(format_scalar(diameter_key(x, norm, tol)));
  return g;
}

template <Scalar T>
LabeledGraph build_graph(const PointConfiguration<T>& x, const Norm<T>& norm, GraphKind kind,
                         const Tolerance& tol = {}) {
  switch (kind) {
    case GraphKind::diameter: return diameter_graph(x, norm, tol);
    case GraphKind::antipodal: return antipodal_graph(x, tol);
    case GraphKind::unit_distance: return unit_distance_graph(x, norm, tol);
    case GraphKind::abstract: break;
  }
  throw Error(ErrorKind::invalid_spec, "cannot build an abstract graph from a configuration");
}

}  // namespace kdiam
