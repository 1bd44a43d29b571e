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

#ifndef DOFLAB_REGIONS_HPP
#define DOFLAB_REGIONS_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "doflab/errors.hpp"
#include "doflab/polytope.hpp"
#include "doflab/rational.hpp"

namespace doflab {

/// M transmit antennas, K users with N_1 >= N_2 >= ... >= N_K > 0 receive antennas.
struct AntennaConfig {
  int M = 1;
  std::vector<int> N;

  AntennaConfig() = default;
  AntennaConfig(int m, std::vector<int> n) : M(m), N(std::move(n)) { validate(); }

  std::size_t users() const { return N.size(); }

  void validate() const {
    if (M < 1) throw std::invalid_argument("M must be at least 1");
    if (N.empty()) throw std::invalid_argument("at least one user is required");
    for (std::size_t i = 0; i < N.size(); ++i) {
      if (N[i] < 1) throw std::invalid_argument("receive antenna counts must be positive");
      if (i > 0 && N[i] > N[i - 1])
        throw std::invalid_argument("receive antenna counts must be non-increasing");
    }
  }

  friend bool operator==(const AntennaConfig&, const AntennaConfig&) = default;
};

using DoFPoint = RationalVector;

namespace detail {
inline DoFRegion checked_bounded(DoFRegion r) {
  if (!is_bounded(r)) throw UnboundedRegionError();
  return r;
}
}  // namespace detail

/// One inequality per permutation pi:
///   sum_i d_pi(i) / min(M, sum_{j>=i} N_pi(j)) <= 1
/// in lexicographic permutation order, before any reduction.
inline std::vector<HalfSpace> outer_bound_halfspaces(const AntennaConfig& config) {
  config.validate();
  const std::size_t k = config.users();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<HalfSpace> out;
  do {
    RationalVector coeffs(k);
    for (std::size_t i = 0; i < k; ++i) {
      int tail = 0;
      for (std::size_t j = i; j < k; ++j) tail += config.N[perm[j]];
      coeffs[perm[i]] = Rational(1, std::min(config.M, tail));
    }
    out.emplace_back(std::move(coeffs), Rational(1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Delayed-CSIT outer bound for any K, redundancy-reduced.
inline DoFRegion outer_bound_region(const AntennaConfig& config) {
  DoFRegion raw(config.users(), outer_bound_halfspaces(config));
  return detail::checked_bounded(remove_redundant(raw));
}

/// Two-user region: L1 then L2, unreduced so callers can address each line.
///   L1: d1/min(M,N1+N2) + d2/min(M,N2) <= 1
///   L2: d1/min(M,N1) + d2/min(M,N1+N2) <= 1
inline DoFRegion two_user_region(int M, int N1, int N2) {
  AntennaConfig cfg(M, {N1, N2});
  const int both = std::min(M, N1 + N2);
  HalfSpace l1({Rational(1, both), Rational(1, std::min(M, N2))}, Rational(1));
  HalfSpace l2({Rational(1, std::min(M, N1)), Rational(1, both)}, Rational(1));
  return detail::checked_bounded(DoFRegion(2, {std::move(l1), std::move(l2)}));
}

/// Three users with N antennas each, M <= 2N. The simplex sum d <= M when
/// M <= N, otherwise the three weighted-sum bounds with weight M/N on d3, d1,
/// d2 respectively.
inline DoFRegion three_user_region(int M, int N) {
  AntennaConfig cfg(M, {N, N, N});
  if (M > 2 * N)
    throw OutOfScopeError("three-user region is only characterized for M <= 2N (M=" +
                          std::to_string(M) + ", N=" + std::to_string(N) + ")");
  if (M <= N) return detail::checked_bounded(DoFRegion(3, {HalfSpace({1, 1, 1}, Rational(M))}));
  const Rational r(M, N);
  std::vector<HalfSpace> hs;
  hs.emplace_back(RationalVector{1, 1, r}, Rational(M));
  hs.emplace_back(RationalVector{r, 1, 1}, Rational(M));
  hs.emplace_back(RationalVector{1, r, 1}, Rational(M));
  return detail::checked_bounded(DoFRegion(3, std::move(hs)));
}

enum class TwoUserCase { A, B, C };

inline TwoUserCase classify(int M, int N1, int N2) {
  AntennaConfig cfg(M, {N1, N2});
  if (M <= N1) return TwoUserCase::A;
  if (M < N1 + N2) return TwoUserCase::B;
  return TwoUserCase::C;
}

inline char case_letter(TwoUserCase c) {
  return c == TwoUserCase::A ? 'A' : (c == TwoUserCase::B ? 'B' : 'C');
}

/// Corner Q of the two-user region. In case A the two lines do not cross
/// inside the region; `point` is empty and `face` holds the binding line.
struct CornerQ {
  TwoUserCase which = TwoUserCase::A;
  std::optional<DoFPoint> point;
  HalfSpace face;  // the dominant face in case A (d . face = 1)
};

inline CornerQ point_Q(int M, int N1, int N2) {
  CornerQ q;
  q.which = classify(M, N1, N2);
  switch (q.which) {
    case TwoUserCase::A:
      q.face = HalfSpace({Rational(1, std::min(M, N1 + N2)), Rational(1, std::min(M, N2))}, Rational(1));
      break;
    case TwoUserCase::B: {
      const Rational den = Rational(N1 * (M - N2) + M * (M - N1));
      q.point = DoFPoint{Rational(M * N1 * (M - N2)) / den, Rational(M * N2 * (M - N1)) / den};
      break;
    }
    case TwoUserCase::C: {
      const Rational den = Rational(N1 * N1 + N2 * N2 + N1 * N2);
      q.point = DoFPoint{Rational(N1 * N1 * (N1 + N2)) / den, Rational(N2 * N2 * (N1 + N2)) / den};
      break;
    }
  }
  return q;
}

/// K N / (1 + 1/2 + ... + 1/K).
inline Rational sum_dof_closed_form(int K, int N) {
  if (K < 1 || N < 1) throw std::invalid_argument("sum_dof_closed_form: K and N must be positive");
  Rational harmonic;
  for (int i = 1; i <= K; ++i) harmonic += Rational(1, i);
  return Rational(K * N) / harmonic;
}

enum class Csit { perfect, none };

/// Sum-DoF with perfect CSIT, min(M, sum N_i), or no CSIT, min(M, max N_i).
inline Rational benchmark_sum_dof(const AntennaConfig& config, Csit csit) {
  config.validate();
  if (csit == Csit::perfect)
    return Rational(std::min(config.M, std::accumulate(config.N.begin(), config.N.end(), 0)));
  return Rational(std::min(config.M, *std::max_element(config.N.begin(), config.N.end())));
}

inline RationalVector all_ones(std::size_t k) { return RationalVector(k, Rational(1)); }

}  // namespace doflab

#endif  // DOFLAB_REGIONS_HPP
