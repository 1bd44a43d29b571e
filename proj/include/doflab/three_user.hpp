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

#ifndef DOFLAB_THREE_USER_HPP
#define DOFLAB_THREE_USER_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "doflab/errors.hpp"
#include "doflab/polytope.hpp"
#include "doflab/rational.hpp"
#include "doflab/regions.hpp"

namespace doflab {

/// Largest d_k in a two-user corner of the symmetric three-user region: MN/(M+N).
inline Rational slice_max_d3(int M, int N) { return Rational(M * N, M + N); }

/// Value at which the fully symmetric corner sits: MN/(M+2N).
inline Rational symmetric_corner_value(int M, int N) { return Rational(M * N, M + 2 * N); }

namespace detail {
inline void require_second_branch(int M, int N) {
  if (N < 1 || M <= N || M > 2 * N)
    throw OutOfScopeError("plane slices need N < M <= 2N (M=" + std::to_string(M) +
                          ", N=" + std::to_string(N) + ")");
}
}  // namespace detail

enum class SlicePoint { P01, P02, P12, P0d1, P0d2, P1d1, P2d2 };

inline constexpr std::array<SlicePoint, 7> all_slice_points = {
    SlicePoint::P01, SlicePoint::P02, SlicePoint::P12, SlicePoint::P0d1,
    SlicePoint::P0d2, SlicePoint::P1d1, SlicePoint::P2d2};

inline std::string_view name(SlicePoint p) {
  switch (p) {
    case SlicePoint::P01: return "P01";
    case SlicePoint::P02: return "P02";
    case SlicePoint::P12: return "P12";
    case SlicePoint::P0d1: return "P0d1";
    case SlicePoint::P0d2: return "P0d2";
    case SlicePoint::P1d1: return "P1d1";
    case SlicePoint::P2d2: return "P2d2";
  }
  return "?";
}

/// Cross-section of the three-user region (N < M <= 2N) at fixed d3, in the
/// (d1, d2) plane. Bounds:
///   L0: d1 + d2 <= M - (M/N) d3
///   L1: (M/N) d1 + d2 <= M - d3
///   L2: d1 + (M/N) d2 <= M - d3
/// Pij is the crossing of Li and Lj, Pidk the crossing of Li with the dk axis.
/// Only points lying inside the slice are kept; they are stored as 3-tuples
/// with d3 appended.
struct PlaneSlice {
  int M = 0;
  int N = 0;
  Rational d3;
  std::array<HalfSpace, 3> bounds;  // L0, L1, L2
  std::map<SlicePoint, DoFPoint> special_points;

  DoFRegion region() const { return DoFRegion(2, {bounds[0], bounds[1], bounds[2]}); }

  std::optional<DoFPoint> point(SlicePoint p) const {
    auto it = special_points.find(p);
    if (it == special_points.end()) return std::nullopt;
    return it->second;
  }
};

inline PlaneSlice plane_slice(int M, int N, const Rational& d3) {
  detail::require_second_branch(M, N);
  if (d3.sign() < 0 || d3 > slice_max_d3(M, N))
    throw std::out_of_range("d3 = " + d3.str() + " outside [0, " + slice_max_d3(M, N).str() + "]");
  const Rational r(M, N);
  const Rational m(M);

  PlaneSlice s;
  s.M = M;
  s.N = N;
  s.d3 = d3;
  s.bounds = {HalfSpace({1, 1}, m - r * d3), HalfSpace({r, 1}, m - d3), HalfSpace({1, r}, m - d3)};

  auto cross = [&](std::size_t i, std::size_t j) {
    const auto& a = s.bounds[i];
    const auto& b = s.bounds[j];
    auto x = detail::solve_square({a.coefficients, b.coefficients}, {a.bound, b.bound});
    if (!x) throw std::logic_error("parallel slice bounds");
    return *x;
  };
  auto on_axis = [&](std::size_t i, std::size_t axis) {
    const auto& h = s.bounds[i];
    RationalVector p(2);
    p[axis] = h.bound / h.coefficients[axis];
    return p;
  };

  const DoFRegion poly = s.region();
  auto keep = [&](SlicePoint which, const RationalVector& p2) {
    if (contains(poly, p2)) s.special_points[which] = DoFPoint{p2[0], p2[1], d3};
  };
  keep(SlicePoint::P01, cross(0, 1));
  keep(SlicePoint::P02, cross(0, 2));
  keep(SlicePoint::P12, cross(1, 2));
  keep(SlicePoint::P0d1, on_axis(0, 0));
  keep(SlicePoint::P0d2, on_axis(0, 1));
  keep(SlicePoint::P1d1, on_axis(1, 0));
  keep(SlicePoint::P2d2, on_axis(2, 1));
  return s;
}

/// Lines (indices into PlaneSlice::bounds) a special point sits on, plus the
/// axis it lies on if any (0 = d1 axis, so d2 = 0; 1 = d2 axis).
struct SlicePointDefinition {
  std::vector<std::size_t> lines;
  std::optional<std::size_t> axis;
};

inline SlicePointDefinition definition(SlicePoint p) {
  switch (p) {
    case SlicePoint::P01: return {{0, 1}, std::nullopt};
    case SlicePoint::P02: return {{0, 2}, std::nullopt};
    case SlicePoint::P12: return {{1, 2}, std::nullopt};
    case SlicePoint::P0d1: return {{0}, 0};
    case SlicePoint::P0d2: return {{0}, 1};
    case SlicePoint::P1d1: return {{1}, 0};
    case SlicePoint::P2d2: return {{2}, 1};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Time-sharing decompositions of three-user points.

enum class PlanSource { two_user_scheme, single_user, time_division, external_corner };

inline std::string_view name(PlanSource s) {
  switch (s) {
    case PlanSource::two_user_scheme: return "two-user-scheme";
    case PlanSource::single_user: return "single-user";
    case PlanSource::time_division: return "time-division";
    case PlanSource::external_corner: return "external-abdoli";
  }
  return "?";
}

inline PlanSource parse_plan_source(std::string_view s) {
  for (auto v : {PlanSource::two_user_scheme, PlanSource::single_user, PlanSource::time_division,
                 PlanSource::external_corner})
    if (name(v) == s) return v;
  throw std::invalid_argument("unknown plan source: " + std::string(s));
}

/// One time-shared operating point. `users` lists the served users (0-based):
/// two for a two-user-scheme point, one for a single-user corner, none for
/// the silent origin, all three for the external symmetric corner.
struct PlanComponent {
  DoFPoint point;
  Rational weight;
  PlanSource source;
  std::vector<std::size_t> users;

  friend bool operator==(const PlanComponent&, const PlanComponent&) = default;
};

struct AchievabilityPlan {
  int M = 0;
  int N = 0;
  DoFPoint target;
  std::vector<PlanComponent> components;

  DoFPoint weighted_sum() const {
    DoFPoint sum(target.size());
    for (const auto& c : components) sum = sum + c.weight * c.point;
    return sum;
  }
  Rational total_weight() const {
    Rational w;
    for (const auto& c : components) w += c.weight;
    return w;
  }
  bool executable() const {
    return std::none_of(components.begin(), components.end(), [](const PlanComponent& c) {
      return c.source == PlanSource::external_corner;
    });
  }
};

namespace detail {

// Affine combination of region corners, accumulated with merging.
class CornerMix {
 public:
  void add(const PlanComponent& corner, const Rational& w) {
    if (w.is_zero()) return;
    for (auto& c : parts_)
      if (c.point == corner.point && c.source == corner.source) {
        c.weight += w;
        return;
      }
    PlanComponent copy = corner;
    copy.weight = w;
    parts_.push_back(std::move(copy));
  }
  void add(const CornerMix& other, const Rational& w) {
    for (const auto& c : other.parts_) add(c, w * c.weight);
  }
  DoFPoint sum() const {
    DoFPoint s(3);
    for (const auto& c : parts_) s = s + c.weight * c.point;
    return s;
  }
  const std::vector<PlanComponent>& parts() const { return parts_; }

 private:
  std::vector<PlanComponent> parts_;
};

struct SliceVertex {
  DoFPoint point;
  CornerMix mix;
};

inline Rational cross2(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

}  // namespace detail

/// Writes `target` (inside the symmetric three-user region, N < M <= 2N) as
/// an exact convex combination of the region's corners: the silent origin,
/// single-user corners N e_i, pairwise two-user corners, and the symmetric
/// corner MN/(M+2N) (1,1,1). A coordinate k with target_k <= MN/(M+N) is
/// fixed, the target is placed in the slice polygon at d_k = target_k, and
/// each polygon vertex is time-shared between corners.
inline AchievabilityPlan achievability_plan(int M, int N, const DoFPoint& target) {
  detail::require_second_branch(M, N);
  const DoFRegion region = three_user_region(M, N);
  if (target.size() != 3) throw std::invalid_argument("three-user target must have 3 coordinates");
  if (!contains(region, target))
    throw std::invalid_argument("target (" + to_string(target) + ") lies outside the region");

  const Rational q = slice_max_d3(M, N);
  const Rational c = symmetric_corner_value(M, N);
  const Rational r(M, N);
  const Rational m(M);

  // Fixed coordinate: prefer the last one, mirroring the d3 slices.
  std::size_t k = 3;
  for (std::size_t i = 3; i-- > 0;)
    if (target[i] <= q) {
      k = i;
      break;
    }
  if (k == 3) throw std::logic_error("no coordinate within the two-user corner value");
  std::array<std::size_t, 2> free{};
  for (std::size_t i = 0, j = 0; i < 3; ++i)
    if (i != k) free[j++] = i;
  const std::size_t a = free[0], b = free[1];

  auto point_of = [](std::initializer_list<std::pair<std::size_t, Rational>> coords) {
    DoFPoint p(3);
    for (const auto& [i, v] : coords) p[i] = v;
    return p;
  };
  const PlanComponent origin{DoFPoint(3), 0, PlanSource::time_division, {}};
  auto single = [&](std::size_t i) {
    return PlanComponent{point_of({{i, Rational(N)}}), 0, PlanSource::single_user, {i}};
  };
  auto pair = [&](std::size_t i, std::size_t j) {
    return PlanComponent{point_of({{i, q}, {j, q}}), 0, PlanSource::two_user_scheme,
                         {std::min(i, j), std::max(i, j)}};
  };
  const PlanComponent symmetric{DoFPoint{c, c, c}, 0, PlanSource::external_corner, {0, 1, 2}};

  const Rational z = target[k];
  auto vertex = [&](DoFPoint p, std::initializer_list<std::pair<const PlanComponent*, Rational>> mix) {
    detail::SliceVertex v{std::move(p), {}};
    for (const auto& [corner, w] : mix) v.mix.add(*corner, w);
    if (v.mix.sum() != v.point) throw std::logic_error("slice vertex decomposition mismatch");
    return v;
  };

  const auto e_k = single(k), e_a = single(a), e_b = single(b);
  const auto q_ak = pair(a, k), q_bk = pair(b, k), q_ab = pair(a, b);
  const Rational edge = (m - z) / r;  // P1d1 / P2d2 coordinate

  std::vector<detail::SliceVertex> polygon;
  polygon.push_back(vertex(point_of({{k, z}}), {{&e_k, z / Rational(N)}, {&origin, 1 - z / Rational(N)}}));
  polygon.push_back(vertex(point_of({{a, edge}, {k, z}}), {{&q_ak, z / q}, {&e_a, 1 - z / q}}));
  if (z >= c) {
    const Rational lambda = (z - c) / (q - c);
    const Rational far = m - (1 + r) * z;
    polygon.push_back(vertex(point_of({{a, z}, {b, far}, {k, z}}), {{&q_ak, lambda}, {&symmetric, 1 - lambda}}));
    polygon.push_back(vertex(point_of({{a, far}, {b, z}, {k, z}}), {{&q_bk, lambda}, {&symmetric, 1 - lambda}}));
  } else {
    const Rational mu = z / c;
    const Rational diag = (m - z) / (r + 1);
    polygon.push_back(vertex(point_of({{a, diag}, {b, diag}, {k, z}}), {{&symmetric, mu}, {&q_ab, 1 - mu}}));
  }
  polygon.push_back(vertex(point_of({{b, edge}, {k, z}}), {{&q_bk, z / q}, {&e_b, 1 - z / q}}));
  polygon.erase(std::unique(polygon.begin(), polygon.end(),
                            [](const auto& x, const auto& y) { return x.point == y.point; }),
                polygon.end());

  // Fan triangulation from the polygon vertex on the d_k axis.
  const auto& base = polygon.front();
  const Rational tx = target[a] - base.point[a], ty = target[b] - base.point[b];
  AchievabilityPlan plan{M, N, target, {}};
  for (std::size_t i = 1; i + 1 < polygon.size(); ++i) {
    const auto& u = polygon[i];
    const auto& v = polygon[i + 1];
    const Rational ux = u.point[a] - base.point[a], uy = u.point[b] - base.point[b];
    const Rational vx = v.point[a] - base.point[a], vy = v.point[b] - base.point[b];
    const Rational det = detail::cross2(ux, uy, vx, vy);
    if (det.is_zero()) continue;
    const Rational alpha = detail::cross2(tx, ty, vx, vy) / det;
    const Rational beta = detail::cross2(ux, uy, tx, ty) / det;
    if (alpha.sign() < 0 || beta.sign() < 0 || alpha + beta > Rational(1)) continue;
    detail::CornerMix total;
    total.add(base.mix, 1 - alpha - beta);
    total.add(u.mix, alpha);
    total.add(v.mix, beta);
    for (const auto& part : total.parts())
      if (!part.weight.is_zero()) plan.components.push_back(part);
    break;
  }
  if (plan.components.empty() || plan.weighted_sum() != target || plan.total_weight() != Rational(1))
    throw std::logic_error("failed to decompose target (" + to_string(target) + ")");
  for (const auto& comp : plan.components)
    if (comp.weight.sign() <= 0) throw std::logic_error("non-positive time-sharing weight");
  return plan;
}

}  // namespace doflab

#endif  // DOFLAB_THREE_USER_HPP
