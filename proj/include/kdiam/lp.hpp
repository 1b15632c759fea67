#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kdiam/linalg.hpp"

namespace kdiam {

enum class LpStatus { optimal, infeasible, unbounded };
enum class RowSense { le, ge, eq };

/// maximize objective . x subject to rows, with each variable either free or x >= 0.
template <Scalar T>
struct LinearProgram {
  struct Row {
    std::vector<T> coeffs;
    RowSense sense = RowSense::le;
    T rhs = T(0);
  };

  explicit LinearProgram(std::size_t num_vars, bool all_free = true)
      : free_var(num_vars, all_free), objective(num_vars, T(0)) {}

  std::size_t num_vars() const { return objective.size(); }
  void add_row(std::vector<T> coeffs, RowSense sense, T rhs) {
    rows.push_back(Row{std::move(coeffs), sense, std::move(rhs)});
  }

  std::vector<bool> free_var;
  std::vector<T> objective;
  std::vector<Row> rows;
};

template <Scalar T>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<T> x;
  T value = T(0);
  std::size_t pivots = 0;
};

namespace detail {

// Dense tableau simplex with Bland's rule. `rc` holds reduced costs c_j - c_B B^-1 A_j,
// with rc.back() equal to minus the current objective value.
template <Scalar T>
class Tableau {
 public:
  Tableau(Matrix<T> rows, std::vector<std::size_t> basis, const Tolerance& tol)
      : a_(std::move(rows)), basis_(std::move(basis)), tol_(tol) {}

  void set_costs(const std::vector<T>& c) {
    const std::size_t cols = a_.empty() ? c.size() + 1 : a_.front().size();
    rc_.assign(cols, T(0));
    for (std::size_t j = 0; j + 1 < cols; ++j) rc_[j] = c[j];
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const T& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) rc_[j] -= cb * a_[i][j];
    }
  }

  // Returns false when unbounded.
  bool optimize(const std::vector<bool>& allowed, std::size_t& pivots) {
    const std::size_t cols = rc_.size();
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j + 1 < cols; ++j)
        if (allowed[j] && positive(rc_[j])) {
          enter = j;
          break;
        }
      if (enter == cols) return true;
      std::size_t leave = a_.size();
      T best_ratio(0);
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (!positive(a_[i][enter])) continue;
        T ratio = a_[i].back() / a_[i][enter];
        if (leave == a_.size()) {
          leave = i;
          best_ratio = ratio;
          continue;
        }
        int s = sign_of<T>(ratio - best_ratio, tol_);
        if (s < 0 || (s == 0 && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == a_.size()) return false;
      pivot(leave, enter);
      ++pivots;
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    const std::size_t cols = a_[r].size();
    T inv = T(1) / a_[r][e];
    for (auto& v : a_[r]) v *= inv;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][e] == 0) continue;
      T f = a_[i][e];
      for (std::size_t j = 0; j < cols; ++j)
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
    }
    if (rc_[e] != 0) {
      T f = rc_[e];
      for (std::size_t j = 0; j < cols; ++j)
        if (a_[r][j] != 0) rc_[j] -= f * a_[r][j];
    }
    basis_[r] = e;
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  bool positive(const T& v) const { return sign_of<T>(v, tol_) > 0; }
  bool nonzero(const T& v) const { return sign_of<T>(v, tol_) != 0; }

  Matrix<T>& rows() { return a_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<T>& reduced_costs() const { return rc_; }

 private:
  Matrix<T> a_;
  std::vector<std::size_t> basis_;
  std::vector<T> rc_;
  Tolerance tol_;
};

}  // namespace detail

template <Scalar T>
LpResult<T> solve_lp(const LinearProgram<T>& lp, const Tolerance& tol = {}) {
  const std::size_t n = lp.num_vars();
  // Column layout: split variables, then one slack/surplus per inequality, then artificials.
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    if (lp.free_var[j]) neg_col[j] = cols++;
  }
  const std::size_t m = lp.rows.size();
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    if (lp.rows[i].sense != RowSense::eq) slack_col[i] = cols++;
  const std::size_t first_artificial = cols;

  Matrix<T> a(m);
  std::vector<int> row_flip(m, 1);
  std::vector<std::size_t> basis(m);
  std::vector<std::size_t> artificial_rows;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    int flip = sign_of<T>(row.rhs, tol) < 0 ? -1 : 1;
    row_flip[i] = flip;
    bool needs_artificial = true;
    if (row.sense == RowSense::le && flip > 0) needs_artificial = false;
    if (row.sense == RowSense::ge && flip < 0) needs_artificial = false;
    if (needs_artificial) artificial_rows.push_back(i);
  }
  const std::size_t total = first_artificial + artificial_rows.size();
  for (std::size_t i = 0, art = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    const T f = T(row_flip[i]);
    auto& r = a[i];
    r.assign(total + 1, T(0));
    for (std::size_t j = 0; j < n; ++j) {
      if (j >= row.coeffs.size()) break;
      r[pos_col[j]] = f * row.coeffs[j];
      if (neg_col[j] != SIZE_MAX) r[neg_col[j]] = -r[pos_col[j]];
    }
    if (slack_col[i] != SIZE_MAX) r[slack_col[i]] = row.sense == RowSense::le ? f : T(-f);
    r[total] = f * row.rhs;
    if (art < artificial_rows.size() && artificial_rows[art] == i) {
      r[first_artificial + art] = T(1);
      basis[i] = first_artificial + art;
      ++art;
    } else {
      basis[i] = slack_col[i];
    }
  }

  LpResult<T> result;
  detail::Tableau<T> tab(std::move(a), std::move(basis), tol);
  std::vector<bool> allowed(total, true);

  if (!artificial_rows.empty()) {
    std::vector<T> phase1(total, T(0));
    for (std::size_t c = first_artificial; c < total; ++c) phase1[c] = T(-1);
    tab.set_costs(phase1);
    tab.optimize(allowed, result.pivots);
    if (sign_of<T>(tab.reduced_costs().back(), tol) > 0) {  // optimum of -sum(art) is < 0
      result.status = LpStatus::infeasible;
      return result;
    }
    // Drive remaining artificials out of the basis; rows that cannot pivot are redundant.
    for (std::size_t i = 0; i < tab.rows().size();) {
      if (tab.basis()[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t e = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j)
        if (tab.nonzero(tab.rows()[i][j])) {
          e = j;
          break;
        }
      if (e == first_artificial) {
        tab.drop_row(i);
      } else {
        tab.pivot(i, e);
        ++i;
      }
    }
    for (std::size_t c = first_artificial; c < total; ++c) allowed[c] = false;
  }

  std::vector<T> cost(total, T(0));
  for (std::size_t j = 0; j < n; ++j) {
    cost[pos_col[j]] = lp.objective[j];
    if (neg_col[j] != SIZE_MAX) cost[neg_col[j]] = -lp.objective[j];
  }
  tab.set_costs(cost);
  if (!tab.optimize(allowed, result.pivots)) {
    result.status = LpStatus::unbounded;
    return result;
  }

  std::vector<T> col_value(total, T(0));
  for (std::size_t i = 0; i < tab.rows().size(); ++i) col_value[tab.basis()[i]] = tab.rows()[i].back();
  result.x.assign(n, T(0));
  for (std::size_t j = 0; j < n; ++j) {
    result.x[j] = col_value[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) result.x[j] -= col_value[neg_col[j]];
  }
  result.value = -tab.reduced_costs().back();
  result.status = LpStatus::optimal;
  return result;
}

}  // namespace kdiam
