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

#include <gtest/gtest.h>

#include "doflab/simplex.hpp"

using doflab::LpStatus;
using doflab::Rational;
using doflab::RationalVector;
using doflab::solve_lp;

TEST(Simplex, SmallOptimum) {
  // max x + y s.t. x/4 + y/2 <= 1, x/3 + y/4 <= 1
  auto r = solve_lp({{Rational(1, 4), Rational(1, 2)}, {Rational(1, 3), Rational(1, 4)}}, {1, 1}, {1, 1});
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, Rational(16, 5));
  EXPECT_EQ(r.argmax, (RationalVector{Rational(12, 5), Rational(4, 5)}));
}

TEST(Simplex, Unbounded) {
  auto r = solve_lp({{1, -1}}, {1}, {0, 1});
  EXPECT_EQ(r.status, LpStatus::unbounded);
}

TEST(Simplex, InfeasibleNeedsPhaseOne) {
  // x + y <= 1 and -x - y <= -2
  auto r = solve_lp({{1, 1}, {-1, -1}}, {1, -2}, {1, 0});
  EXPECT_EQ(r.status, LpStatus::infeasible);
}

TEST(Simplex, PhaseOneFeasible) {
  // x >= 1 (as -x <= -1), x + y <= 3, maximize y
  auto r = solve_lp({{-1, 0}, {1, 1}}, {-1, 3}, {0, 1});
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, Rational(2));
}

TEST(Simplex, DegenerateCoincidingConstraintsTerminate) {
  // Two identical lines plus a redundant copy scaled by 2: heavy degeneracy at the vertex.
  auto r = solve_lp({{1, 1}, {1, 1}, {2, 2}, {1, 0}}, {1, 1, 2, 1}, {1, 1});
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, Rational(1));
}
