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

// Test-only reference computations, independent of the library's simplex
// and elimination code.
#ifndef DOFLAB_TESTS_ORACLE_HPP
#define DOFLAB_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "doflab/rational.hpp"

namespace oracle {

using doflab::Rational;
using doflab::RationalVector;
using Matrix = std::vector<RationalVector>;

// Leibniz expansion; fine for n <= 4.
inline Rational det(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? Rational(-1) : Rational(1);
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Constraint rows a.x <= b. Nonnegativity must be supplied explicitly.
struct Constraint {
  RationalVector a;
  Rational b;
};

inline std::vector<Constraint> with_nonneg(std::vector<Constraint> cs, std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVector e(dim);
    e[i] = -1;
    cs.push_back({e, 0});
  }
  return cs;
}

// Cramer's rule over every dim-subset of constraints; keeps feasible points.
inline std::vector<RationalVector> vertices(const std::vector<Constraint>& cs, std::size_t dim) {
  std::vector<RationalVector> out;
  const std::size_t m = cs.size();
  std::vector<std::size_t> idx(dim);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == dim) {
      Matrix a;
      for (auto i : idx) a.push_back(cs[i].a);
      const Rational d = det(a);
      if (d.is_zero()) return;
      RationalVector x(dim);
      for (std::size_t c = 0; c < dim; ++c) {
        Matrix ac = a;
        for (std::size_t r = 0; r < dim; ++r) ac[r][c] = cs[idx[r]].b;
        x[c] = det(ac) / d;
      }
      for (const auto& con : cs)
        if (doflab::dot(con.a, x) > con.b) return;
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline Rational max_over(const std::vector<RationalVector>& pts, const RationalVector& c) {
  Rational best = doflab::dot(pts.at(0), c);
  for (const auto& p : pts) best = std::max(best, doflab::dot(p, c));
  return best;
}

}  // namespace oracle

#endif  // DOFLAB_TESTS_ORACLE_HPP
