#pragma once

#include "kdiam/configuration_graph.hpp"
#include "kdiam/report.hpp"

namespace kdiam {

namespace detail {

inline void require_k(std::size_t k) {
  if (k < 2) throw Error(ErrorKind::invalid_spec, "k must be at least 2");
}

// Fills verdict and witness from "no independent k-set in g".
inline void decide_by_independence(VerificationReport& r, const LabeledGraph& g, std::size_t k) {
  r.edges = g.edges();
  if (g.n() < k) {
    r.verdict = true;
    r.add_flag("vacuous");
    return;
  }
  auto bad = find_independent_set(g, k);
  r.verdict = !bad.has_value();
  if (bad) r.witness = *bad;
}

}  // namespace detail

/// Every k points contain a pair at the configuration's diameter.
template <Scalar T>
VerificationReport is_k_diametral(const PointConfiguration<T>& x, const Norm<T>& norm, std::size_t k,
                                  const Tolerance& tol = {}) {
  detail::require_k(k);
  auto r = make_report<T>("k-diametral", k, tol);
  r.norm = norm.name();
  auto g = diameter_graph(x, norm, tol);
  r.diameter_key = g.diameter_key();
  detail::decide_by_independence(r, g, k);
  return r;
}

/// Every k points contain a pair on distinct parallel supporting hyperplanes.
template <Scalar T>
VerificationReport is_k_antipodal(const PointConfiguration<T>& x, std::size_t k,
                                  const Tolerance& tol = {}) {
  detail::require_k(k);
  auto r = make_report<T>("k-antipodal", k, tol);
  AntipodalityTester<T> tester(x, tol);
  if (tester.lower_dimensional()) r.add_flag("lower_dimensional");
  detail::decide_by_independence(r, antipodal_graph(x, tol), k);
  return r;
}

/// Every k points contain a pair at distance exactly one.
template <Scalar T>
VerificationReport is_k_equidistant(const PointConfiguration<T>& x, const Norm<T>& norm, std::size_t k,
                                    const Tolerance& tol = {}) {
  detail::require_k(k);
  auto r = make_report<T>("k-equidistant", k, tol);
  r.norm = norm.name();
  detail::decide_by_independence(r, unit_distance_graph(x, norm, tol), k);
  return r;
}

/// Cross-checks k-antipodality of X against k-diametrality of X under the gauge
/// of its difference body. The verdict is true iff both verdicts agree, the gauge
/// diameter is exactly one, and the two edge sets coincide. On disagreement the
/// symmetric difference of the edge sets is reported in `edges`.
template <Scalar T>
VerificationReport check_antipodal_gauge_equivalence(const PointConfiguration<T>& x, std::size_t k,
                                                     const Tolerance& tol = {}) {
  detail::require_k(k);
  auto r = make_report<T>("antipodal-gauge-equivalence", k, tol);
  r.norm = "gauge(difference body)";
  auto gauge = Norm<T>::gauge(difference_body(x, tol), tol);
  auto ga = antipodal_graph(x, tol);
  auto gd = diameter_graph(x, gauge, tol);
  VerificationReport anti = r, diam = r;
  detail::decide_by_independence(anti, ga, k);
  detail::decide_by_independence(diam, gd, k);
  bool unit = scalar_equal(diameter_key(x, gauge, tol), T(1), tol);
  bool same = ga.same_edges(gd);
  r.diameter_key = gd.diameter_key();
  r.details["antipodal_verdict"] = anti.verdict ? "true" : "false";
  r.details["gauge_diametral_verdict"] = diam.verdict ? "true" : "false";
  r.details["gauge_diameter_is_one"] = unit ? "true" : "false";
  r.details["edge_sets_equal"] = same ? "true" : "false";
  if (AntipodalityTester<T>(x, tol).lower_dimensional()) r.add_flag("lower_dimensional");
  if (anti.has_flag("vacuous")) r.add_flag("vacuous");
  r.verdict = anti.verdict == diam.verdict && unit && same;
  if (same) {
    r.edges = ga.edges();
  } else {
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j)
        if (ga.adjacent(i, j) != gd.adjacent(i, j)) r.edges.emplace_back(i, j);
  }
  if (anti.verdict == diam.verdict && !anti.verdict) r.witness = anti.witness;
  return r;
}

}  // namespace kdiam
