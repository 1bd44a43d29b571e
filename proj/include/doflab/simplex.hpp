// Copyright 2026 The doflab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOFLAB_SIMPLEX_HPP
#define DOFLAB_SIMPLEX_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "doflab/rational.hpp"

namespace doflab {

enum class LpStatus { optimal, unbounded, infeasible };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;            // valid when optimal
  RationalVector argmax;     // valid when optimal
};

namespace detail {

// Dense two-phase tableau simplex over exact rationals with Bland's rule.
// Columns: [structural x | slacks | artificials | rhs].
class Tableau {
 public:
  Tableau(const std::vector<RationalVector>& rows, const RationalVector& rhs,
          std::size_t num_vars)
      : m_(rows.size()), n_(num_vars) {
    num_art_ = 0;
    for (const auto& b : rhs)
      if (b.sign() < 0) ++num_art_;
    cols_ = n_ + m_ + num_art_;
    t_.assign(m_, RationalVector(cols_ + 1));
    basis_.assign(m_, 0);
    std::size_t art = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = rhs[i].sign() < 0;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? -rows[i][j] : rows[i][j];
      t_[i][n_ + i] = flip ? Rational(-1) : Rational(1);
      t_[i][cols_] = flip ? -rhs[i] : rhs[i];
      if (flip) {
        const std::size_t col = n_ + m_ + art++;
        t_[i][col] = 1;
        basis_[i] = col;
      } else {
        basis_[i] = n_ + i;
      }
    }
    allowed_.assign(cols_, true);
  }

  bool is_artificial(std::size_t col) const { return col >= n_ + m_; }

  // Maximizes cost . columns over allowed columns. Returns false if unbounded.
  bool optimize(const RationalVector& cost) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!allowed_[j] || is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < t_.size(); ++i)
          if (!t_[i][j].is_zero()) reduced -= cost[basis_[i]] * t_[i][j];
        if (reduced.sign() > 0) {
          enter = j;  // Bland: lowest index with positive reduced cost
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][*enter].sign() <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][*enter];
        if (!leave || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  Rational objective(const RationalVector& cost) const {
    Rational v;
    for (std::size_t i = 0; i < t_.size(); ++i) v += cost[basis_[i]] * t_[i][cols_];
    return v;
  }

  // After a feasible phase one: pivot artificials out of the basis (or drop
  // their rows when redundant) and forbid artificial columns.
  void retire_artificials() {
    for (std::size_t i = 0; i < t_.size();) {
      if (!is_artificial(basis_[i])) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_ + m_; ++j)
        if (!t_[i][j].is_zero()) {
          col = j;
          break;
        }
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (std::size_t j = n_ + m_; j < cols_; ++j) allowed_[j] = false;
  }

  std::size_t columns() const { return cols_; }
  std::size_t num_artificial() const { return num_art_; }
  std::size_t structural() const { return n_; }
  std::size_t slack_offset() const { return n_; }
  std::size_t artificial_offset() const { return n_ + m_; }

  RationalVector structural_solution() const {
    RationalVector x(n_);
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (basis_[i] < n_) x[basis_[i]] = t_[i][cols_];
    return x;
  }

 private:
  bool is_basic(std::size_t col) const {
    for (auto b : basis_)
      if (b == col) return true;
    return false;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = t_[row][col];
    for (auto& v : t_[row]) v /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == row || t_[i][col].is_zero()) continue;
      const Rational f = t_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (!t_[row][j].is_zero()) t_[i][j] -= f * t_[row][j];
    }
    basis_[row] = col;
  }

  std::size_t m_, n_, num_art_ = 0, cols_ = 0;
  std::vector<RationalVector> t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
};

}  // namespace detail

/// Maximizes objective . x subject to rows[i] . x <= rhs[i] and x >= 0,
/// exactly. Never throws for infeasible or unbounded programs; the status
/// says which.
inline LpResult solve_lp(const std::vector<RationalVector>& rows, const RationalVector& rhs,
                         const RationalVector& objective) {
  const std::size_t n = objective.size();
  if (rows.size() != rhs.size()) throw std::invalid_argument("solve_lp: rows/rhs mismatch");
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("solve_lp: row dimension mismatch");

  detail::Tableau tab(rows, rhs, n);
  if (tab.num_artificial() > 0) {
    RationalVector phase1(tab.columns());
    for (std::size_t j = tab.artificial_offset(); j < tab.columns(); ++j) phase1[j] = -1;
    tab.optimize(phase1);  // bounded above by zero
    if (tab.objective(phase1).sign() < 0) return {LpStatus::infeasible, {}, {}};
    tab.retire_artificials();
  }
  RationalVector cost(tab.columns());
  for (std::size_t j = 0; j < n; ++j) cost[j] = objective[j];
  if (!tab.optimize(cost)) return {LpStatus::unbounded, {}, {}};
  return {LpStatus::optimal, tab.objective(cost), tab.structural_solution()};
}

}  // namespace doflab

#endif  // DOFLAB_SIMPLEX_HPP
