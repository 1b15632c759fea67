#pragma once

#include <cstdint>
#include <random>

#include "kdiam/verify.hpp"

namespace kdiam {

/// Half-size homothets x_l + 1/2 (P - x_l) of a polytope P.
template <Scalar T>
struct TilingInstance {
  Polytope<T> body;
  std::vector<Point<T>> centers;
  std::size_t k = 2;
  std::size_t sample_count = 1000;
  std::uint64_t seed = 1;
};

namespace detail {

// Facets of x + 1/2 (P - x): a.y <= (b + a.x) / 2.
template <Scalar T>
std::vector<Facet<T>> half_piece_facets(const Polytope<T>& p, const Point<T>& c) {
  std::vector<Facet<T>> out;
  for (const auto& f : p.facets())
    out.push_back(Facet<T>{f.normal, (f.offset + dot<T>(f.normal, c.coords())) / T(2)});
  return out;
}

template <Scalar T>
void check_pieces(const Polytope<T>& p, const std::vector<Point<T>>& centers, const Tolerance& tol) {
  if (!p.full_dimensional())
    throw Error(ErrorKind::invalid_instance, "tiling body must be full-dimensional");
  if (centers.empty()) throw Error(ErrorKind::invalid_instance, "no pieces given");
  const T half(T(1) / T(2));
  for (std::size_t l = 0; l < centers.size(); ++l) {
    if (centers[l].dim() != p.dim())
      throw Error(ErrorKind::dimension_mismatch, "piece center has the wrong dimension");
    for (const auto& v : p.vertices())
      if (!p.contains(centers[l] + half * (v - centers[l]), tol))
        throw Error(ErrorKind::invalid_instance,
                    "piece " + std::to_string(l) + " is not contained in the body");
  }
}

// Whether the pieces in `set` share an interior point: maximize s subject to
// a.y + s <= b for every facet of every piece, s <= 1.
template <Scalar T>
bool common_interior(const std::vector<std::vector<Facet<T>>>& pieces, const std::vector<std::size_t>& set,
                     const Tolerance& tol) {
  const std::size_t d = pieces.front().front().normal.size();
  LinearProgram<T> lp(d + 1);
  lp.objective[d] = T(1);
  for (auto l : set)
    for (const auto& f : pieces[l]) {
      std::vector<T> row(f.normal);
      row.push_back(T(1));
      lp.add_row(std::move(row), RowSense::le, f.offset);
    }
  std::vector<T> cap(d + 1, T(0));
  cap[d] = T(1);
  lp.add_row(std::move(cap), RowSense::le, T(1));
  auto res = solve_lp(lp, tol);
  return res.status == LpStatus::optimal && sign_of<T>(res.value, tol) > 0;
}

}  // namespace detail

/// Whether the half-homothets of P at `centers` form a (k-1)-fold packing:
/// every k of them have empty common interior. Equal centers give equal pieces,
/// so only sets of distinct pieces are enumerated, extending a set only while
/// its common interior stays nonempty.
template <Scalar T>
VerificationReport verify_k_fold_packing(const Polytope<T>& p, const std::vector<Point<T>>& centers,
                                         std::size_t k, const Tolerance& tol = {}) {
  detail::require_k(k);
  detail::check_pieces(p, centers, tol);
  auto r = make_report<T>("k-fold-packing", k, tol);
  PointConfiguration<T> cfg(p.dim(), centers);
  auto distinct = distinct_points(cfg, tol);
  const std::size_t c = distinct.values.size();
  std::vector<std::vector<Facet<T>>> pieces;
  for (const auto& v : distinct.values) pieces.push_back(detail::half_piece_facets(p, v));

  std::vector<std::size_t> set;
  std::vector<std::size_t> violation;
  std::size_t lp_count = 0;
  auto dfs = [&](auto&& self, std::size_t start, std::size_t mult) -> bool {
    for (std::size_t l = start; l < c; ++l) {
      set.push_back(l);
      ++lp_count;
      if (detail::common_interior(pieces, set, tol)) {
        if (mult + distinct.multiplicity[l] >= k) {
          violation = set;
          return true;
        }
        if (self(self, l + 1, mult + distinct.multiplicity[l])) return true;
      }
      set.pop_back();
    }
    return false;
  };
  bool overlap = c > 0 && dfs(dfs, 0, 0);
  if (overlap) {
    for (auto cls : violation)
      for (std::size_t i = 0; i < centers.size() && r.witness.size() < k; ++i)
        if (distinct.class_of[i] == cls) r.witness.push_back(i);
    std::sort(r.witness.begin(), r.witness.end());
  }

  T vol = polytope_volume(p, tol);
  T piece = polytope_volume(homothet(p, centers.front(), T(T(1) / T(2)), tol), tol);
  T ratio = T(static_cast<long>(centers.size())) * piece / vol;
  bool bound = sign_of<T>(T(static_cast<long>(k - 1)) - ratio, tol) >= 0;
  r.details["volume_ratio"] = format_scalar(ratio);
  r.details["volume_bound_holds"] = bound ? "true" : "false";
  r.details["interior_lps"] = std::to_string(lp_count);
  r.verdict = !overlap && bound;
  return r;
}

/// Whether the half-homothets tile P exactly k-1 times: exact volume identity
/// plus seeded random samples, each of which must lie in the interior of exactly
/// k-1 pieces. Samples on a piece boundary are redrawn.
template <Scalar T>
VerificationReport verify_multiple_tiling(const TilingInstance<T>& inst, const Tolerance& tol = {}) {
  detail::require_k(inst.k);
  if (inst.sample_count < 1000)
    throw Error(ErrorKind::invalid_instance, "tiling verification needs at least 1000 samples");
  detail::check_pieces(inst.body, inst.centers, tol);
  const auto& p = inst.body;
  const std::size_t d = p.dim();
  auto r = make_report<T>("multiple-tiling", inst.k, tol);

  T vol = polytope_volume(p, tol);
  T pieces_vol(0);
  for (const auto& c : inst.centers) pieces_vol += polytope_volume(homothet(p, c, T(T(1) / T(2)), tol), tol);
  bool identity = scalar_equal(pieces_vol, T(T(static_cast<long>(inst.k - 1)) * vol), tol);
  r.details["volume_identity"] = identity ? "true" : "false";
  r.details["pieces_volume"] = format_scalar(pieces_vol);
  r.details["body_volume"] = format_scalar(vol);

  std::vector<std::vector<Facet<T>>> pieces;
  for (const auto& c : inst.centers) pieces.push_back(detail::half_piece_facets(p, c));
  std::vector<T> lo(d), hi(d);
  for (std::size_t a = 0; a < d; ++a) {
    lo[a] = hi[a] = p.vertices().front()[a];
    for (const auto& v : p.vertices()) {
      if (v[a] < lo[a]) lo[a] = v[a];
      if (hi[a] < v[a]) hi[a] = v[a];
    }
  }
  std::mt19937_64 rng(inst.seed);
  constexpr long grid = 1000003;
  std::uniform_int_distribution<long> pick(0, grid);
  auto draw = [&]() {
    Point<T> y(d);
    for (std::size_t a = 0; a < d; ++a) {
      if constexpr (ScalarTraits<T>::exact)
        y[a] = lo[a] + (hi[a] - lo[a]) * Rational(pick(rng), grid);
      else
        y[a] = lo[a] + (hi[a] - lo[a]) * static_cast<double>(pick(rng)) / grid;
    }
    return y;
  };

  std::size_t accepted = 0, failed = 0, attempts = 0;
  const std::size_t max_attempts = inst.sample_count * 1000;
  while (accepted < inst.sample_count && attempts < max_attempts) {
    ++attempts;
    auto y = draw();
    if (!p.contains_in_interior(y, tol)) continue;
    std::size_t inside = 0;
    bool boundary = false;
    for (const auto& piece : pieces) {
      int worst = -1;
      for (const auto& f : piece) worst = std::max(worst, sign_of<T>(dot<T>(f.normal, y.coords()) - f.offset, tol));
      if (worst == 0) boundary = true;
      if (worst < 0) ++inside;
    }
    if (boundary) continue;
    ++accepted;
    if (inside != inst.k - 1) {
      if (failed == 0) {
        std::string s;
        for (std::size_t a = 0; a < d; ++a) s += (a ? " " : "") + format_scalar(y[a]);
        r.details["first_bad_sample"] = s;
        r.details["first_bad_multiplicity"] = std::to_string(inside);
      }
      ++failed;
    }
  }
  r.details["sample_count"] = std::to_string(accepted);
  r.details["seed"] = std::to_string(inst.seed);
  r.details["samples_failed"] = std::to_string(failed);
  r.add_flag("sampled");
  r.verdict = identity && failed == 0 && accepted == inst.sample_count;
  return r;
}

/// Whether X consists of the vertices of an affine d-cube, each with multiplicity
/// k-1. Applies only when n = (k-1) 2^d and X is k-antipodal; otherwise the report
/// is flagged "not_applicable", has a false verdict and carries the antipodality
/// witness when there is one.
template <Scalar T>
VerificationReport verify_cube_extremal(const PointConfiguration<T>& x, std::size_t k,
                                        const Tolerance& tol = {}) {
  detail::require_k(k);
  auto r = make_report<T>("cube-extremal", k, tol);
  const std::size_t d = x.dim();
  const std::size_t corners = std::size_t(1) << d;
  if (x.size() != (k - 1) * corners) {
    r.add_flag("not_applicable");
    r.details["reason"] = "point count is not (k-1) 2^d";
    return r;
  }
  auto anti = is_k_antipodal(x, k, tol);
  if (!anti.verdict) {
    r.add_flag("not_applicable");
    r.details["reason"] = "configuration is not k-antipodal";
    r.witness = anti.witness;
    return r;
  }
  auto distinct = distinct_points(x, tol);
  bool counts = distinct.values.size() == corners;
  for (auto m : distinct.multiplicity) counts = counts && m == k - 1;
  r.details["distinct_points"] = std::to_string(distinct.values.size());
  if (!counts) {
    r.details["reason"] = "multiplicities are not all k-1";
    return r;
  }
  const auto& pts = distinct.values;
  auto same_point = [&](const Point<T>& a, const Point<T>& b) {
    for (std::size_t i = 0; i < d; ++i)
      if (!scalar_equal(a[i], b[i], tol)) return false;
    return true;
  };
  // Every point of a cube is a corner, so the first point can serve as the base.
  bool found = false;
  detail::for_each_combination(pts.size() - 1, d, [&](std::span<const std::size_t> sub) {
    if (found) return;
    std::vector<Point<T>> gens;
    Matrix<T> m;
    for (auto s : sub) {
      gens.push_back(pts[s + 1] - pts[0]);
      m.emplace_back(gens.back().coords().begin(), gens.back().coords().end());
    }
    if (row_reduce(m, tol).size() != d) return;
    std::vector<bool> used(pts.size(), false);
    for (std::size_t mask = 0; mask < corners; ++mask) {
      Point<T> v = pts[0];
      for (std::size_t g = 0; g < d; ++g)
        if (mask >> g & 1) v = v + gens[g];
      bool hit = false;
      for (std::size_t q = 0; q < pts.size() && !hit; ++q)
        if (!used[q] && same_point(v, pts[q])) used[q] = hit = true;
      if (!hit) return;
    }
    found = true;
  });
  r.verdict = found;
  if (!found) r.details["reason"] = "distinct points are not the vertices of an affine cube";
  return r;
}

}  // namespace kdiam
