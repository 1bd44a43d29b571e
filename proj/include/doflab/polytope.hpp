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

#ifndef DOFLAB_POLYTOPE_HPP
#define DOFLAB_POLYTOPE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "doflab/errors.hpp"
#include "doflab/rational.hpp"
#include "doflab/simplex.hpp"

namespace doflab {

/// coefficients . d <= bound
struct HalfSpace {
  RationalVector coefficients;
  Rational bound;

  HalfSpace() = default;
  HalfSpace(RationalVector coeffs, Rational b) : coefficients(std::move(coeffs)), bound(std::move(b)) {
    if (std::all_of(coefficients.begin(), coefficients.end(),
                    [](const Rational& c) { return c.is_zero(); }))
      throw std::invalid_argument("half-space with all-zero coefficients");
  }

  std::size_t dimension() const { return coefficients.size(); }
  Rational lhs(const RationalVector& d) const { return dot(coefficients, d); }
  bool satisfied_by(const RationalVector& d) const { return lhs(d) <= bound; }
  bool tight_at(const RationalVector& d) const { return lhs(d) == bound; }

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Human-readable form, e.g. "1/4 d1 + 1/2 d2 <= 1".
inline std::string to_string(const HalfSpace& h) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < h.coefficients.size(); ++i) {
    const Rational& c = h.coefficients[i];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (mag != Rational(1)) os << mag << " ";
    os << "d" << (i + 1);
    first = false;
  }
  os << " <= " << h.bound;
  return os.str();
}

/// Polytope { d >= 0 : h.coefficients . d <= h.bound for every h }.
/// Nonnegativity is implicit and never stored as a half-space. Immutable.
class DoFRegion {
 public:
  DoFRegion() = default;
  DoFRegion(std::size_t dimension, std::vector<HalfSpace> halfspaces)
      : dim_(dimension), halfspaces_(std::move(halfspaces)) {
    if (dim_ == 0) throw std::invalid_argument("region dimension must be positive");
    for (const auto& h : halfspaces_)
      if (h.dimension() != dim_) throw std::invalid_argument("half-space dimension mismatch");
  }

  std::size_t dimension() const { return dim_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  const std::optional<std::vector<RationalVector>>& cached_vertices() const { return vertices_; }

  /// Copy of this region with the vertex cache filled in.
  DoFRegion with_vertices() const;

 private:
  std::size_t dim_ = 0;
  std::vector<HalfSpace> halfspaces_;
  std::optional<std::vector<RationalVector>> vertices_;
};

namespace detail {

inline LpResult solve_over(const std::vector<HalfSpace>& hs, const RationalVector& objective) {
  std::vector<RationalVector> rows;
  RationalVector rhs;
  rows.reserve(hs.size());
  for (const auto& h : hs) {
    rows.push_back(h.coefficients);
    rhs.push_back(h.bound);
  }
  return solve_lp(rows, rhs, objective);
}

inline RationalVector unit(std::size_t dim, std::size_t i) {
  RationalVector e(dim);
  e[i] = 1;
  return e;
}

// Solves the square system exactly; nullopt when singular.
inline std::optional<RationalVector> solve_square(std::vector<RationalVector> a, RationalVector b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

inline std::size_t rank(std::vector<RationalVector> a) {
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c].is_zero()) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// All constraints of the region as rows (user half-spaces, then -d_i <= 0).
inline std::vector<HalfSpace> with_nonnegativity(const DoFRegion& region) {
  std::vector<HalfSpace> all = region.halfspaces();
  for (std::size_t i = 0; i < region.dimension(); ++i) {
    RationalVector e(region.dimension());
    e[i] = -1;
    all.emplace_back(std::move(e), Rational(0));
  }
  return all;
}

}  // namespace detail

inline void require_dimension(const DoFRegion& region, const RationalVector& v) {
  if (v.size() != region.dimension())
    throw std::invalid_argument("point dimension " + std::to_string(v.size()) +
                                " does not match region dimension " +
                                std::to_string(region.dimension()));
}

/// Exact membership, including nonnegativity.
inline bool contains(const DoFRegion& region, const RationalVector& point) {
  require_dimension(region, point);
  for (const auto& x : point)
    if (x.sign() < 0) return false;
  return std::all_of(region.halfspaces().begin(), region.halfspaces().end(),
                     [&](const HalfSpace& h) { return h.satisfied_by(point); });
}

inline bool is_empty(const DoFRegion& region) {
  return detail::solve_over(region.halfspaces(), RationalVector(region.dimension())).status ==
         LpStatus::infeasible;
}

/// True when every coordinate is bounded above (empty regions count as bounded).
inline bool is_bounded(const DoFRegion& region) {
  for (std::size_t i = 0; i < region.dimension(); ++i) {
    auto r = detail::solve_over(region.halfspaces(), detail::unit(region.dimension(), i));
    if (r.status == LpStatus::infeasible) return true;
    if (r.status == LpStatus::unbounded) return false;
  }
  return true;
}

/// Exact maximum of objective . d over the region.
inline Rational lp_max(const DoFRegion& region, const RationalVector& objective) {
  require_dimension(region, objective);
  auto r = detail::solve_over(region.halfspaces(), objective);
  if (r.status == LpStatus::infeasible) throw EmptyRegionError();
  if (r.status == LpStatus::unbounded) throw UnboundedRegionError();
  return r.value;
}

/// Drops every half-space implied by the others. A half-space is redundant
/// when maximizing its left side over the remaining constraints stays within
/// its bound. Of exact duplicates the first is kept.
inline DoFRegion remove_redundant(const DoFRegion& region) {
  if (!is_bounded(region)) throw UnboundedRegionError();
  std::vector<HalfSpace> kept = region.halfspaces();
  for (std::size_t i = kept.size(); i-- > 0;) {
    std::vector<HalfSpace> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    auto r = detail::solve_over(others, kept[i].coefficients);
    const bool redundant = r.status == LpStatus::infeasible ||
                           (r.status == LpStatus::optimal && r.value <= kept[i].bound);
    if (redundant) kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return DoFRegion(region.dimension(), std::move(kept));
}

/// Exact vertex set by basis enumeration over K-subsets of all constraints
/// (nonnegativity included). Sorted lexicographically, duplicates merged.
inline std::vector<RationalVector> vertex_enumerate(const DoFRegion& region) {
  const std::size_t k = region.dimension();
  if (k > 4) throw UnsupportedDimensionError(k);
  if (region.cached_vertices()) return *region.cached_vertices();
  if (!is_bounded(region)) throw UnboundedRegionError();

  const auto all = detail::with_nonnegativity(region);
  const std::size_t m = all.size();
  std::vector<RationalVector> out;
  if (m < k) return out;

  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<RationalVector> a;
    RationalVector b;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) {
        a.push_back(all[i].coefficients);
        b.push_back(all[i].bound);
      }
    auto x = detail::solve_square(std::move(a), std::move(b));
    if (!x) continue;
    if (std::all_of(all.begin(), all.end(), [&](const HalfSpace& h) { return h.satisfied_by(*x); }))
      out.push_back(std::move(*x));
  } while (std::prev_permutation(pick.begin(), pick.end()));

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline DoFRegion DoFRegion::with_vertices() const {
  DoFRegion copy = *this;
  copy.vertices_ = vertex_enumerate(*this);
  return copy;
}

/// Constraints (nonnegativity included) holding with equality at `point`.
inline std::vector<HalfSpace> active_constraints(const DoFRegion& region, const RationalVector& point) {
  require_dimension(region, point);
  std::vector<HalfSpace> active;
  for (const auto& h : detail::with_nonnegativity(region))
    if (h.tight_at(point)) active.push_back(h);
  return active;
}

/// True when `point` is feasible with K linearly independent active constraints.
inline bool is_basic_feasible(const DoFRegion& region, const RationalVector& point) {
  if (!contains(region, point)) return false;
  std::vector<RationalVector> rows;
  for (const auto& h : active_constraints(region, point)) rows.push_back(h.coefficients);
  return detail::rank(std::move(rows)) == region.dimension();
}

/// a is a subset of b: every face of b supports a within its bound.
inline bool is_subset(const DoFRegion& a, const DoFRegion& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("is_subset: dimension mismatch");
  for (const auto& h : b.halfspaces()) {
    auto r = detail::solve_over(a.halfspaces(), h.coefficients);
    if (r.status == LpStatus::infeasible) return true;
    if (r.status == LpStatus::unbounded || r.value > h.bound) return false;
  }
  return true;
}

inline bool regions_equal(const DoFRegion& a, const DoFRegion& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("regions_equal: dimension mismatch");
  return is_subset(a, b) && is_subset(b, a);
}

/// CSV of points with header "d1,...,dK" and rationals as "p/q".
inline std::string points_csv(std::size_t dimension, const std::vector<RationalVector>& points) {
  std::string out;
  for (std::size_t i = 0; i < dimension; ++i) out += (i ? ",d" : "d") + std::to_string(i + 1);
  out += "\n";
  for (const auto& p : points) out += to_string(p) + "\n";
  return out;
}

/// CSV of half-spaces: header "d1,...,dK,bound", one coefficient row each.
inline std::string halfspaces_csv(const DoFRegion& region) {
  std::string out;
  for (std::size_t i = 0; i < region.dimension(); ++i) out += "d" + std::to_string(i + 1) + ",";
  out += "bound\n";
  for (const auto& h : region.halfspaces()) out += to_string(h.coefficients) + "," + h.bound.str() + "\n";
  return out;
}

namespace detail {
inline std::vector<std::vector<std::string>> split_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      auto comma = line.find(',', pos);
      cells.push_back(line.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}
}  // namespace detail

inline std::vector<RationalVector> parse_points_csv(const std::string& text) {
  auto rows = detail::split_csv(text);
  if (rows.empty()) throw std::invalid_argument("points CSV: missing header");
  std::vector<RationalVector> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) throw std::invalid_argument("points CSV: ragged row");
    RationalVector p;
    for (const auto& c : rows[r]) p.push_back(Rational::parse(c));
    out.push_back(std::move(p));
  }
  return out;
}

inline DoFRegion parse_halfspaces_csv(const std::string& text) {
  auto rows = detail::split_csv(text);
  if (rows.empty() || rows[0].size() < 2 || rows[0].back() != "bound")
    throw std::invalid_argument("half-space CSV: bad header");
  const std::size_t dim = rows[0].size() - 1;
  std::vector<HalfSpace> hs;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != dim + 1) throw std::invalid_argument("half-space CSV: ragged row");
    RationalVector c;
    for (std::size_t i = 0; i < dim; ++i) c.push_back(Rational::parse(rows[r][i]));
    hs.emplace_back(std::move(c), Rational::parse(rows[r][dim]));
  }
  return DoFRegion(dim, std::move(hs));
}

}  // namespace doflab

#endif  // DOFLAB_POLYTOPE_HPP
