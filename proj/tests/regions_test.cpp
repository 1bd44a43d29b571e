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

#include "doflab/regions.hpp"
#include "oracle.hpp"

using namespace doflab;

TEST(AntennaConfig, Validation) {
  EXPECT_NO_THROW(AntennaConfig(4, {3, 2}));
  EXPECT_THROW(AntennaConfig(0, {1}), std::invalid_argument);
  EXPECT_THROW(AntennaConfig(2, {}), std::invalid_argument);
  EXPECT_THROW(AntennaConfig(2, {2, 3}), std::invalid_argument);
  EXPECT_THROW(AntennaConfig(2, {2, 0}), std::invalid_argument);
}

TEST(OuterBound, TwoUserWorkedExample) {
  const auto r = outer_bound_region(AntennaConfig(4, {3, 2}));
  ASSERT_EQ(r.halfspaces().size(), 2u);
  EXPECT_EQ(r.halfspaces()[0], HalfSpace({Rational(1, 4), Rational(1, 2)}, Rational(1)));
  EXPECT_EQ(r.halfspaces()[1], HalfSpace({Rational(1, 3), Rational(1, 4)}, Rational(1)));
}

TEST(OuterBound, SingleUser) {
  const auto r = outer_bound_region(AntennaConfig(1, {1}));
  ASSERT_EQ(r.halfspaces().size(), 1u);
  EXPECT_EQ(to_string(r.halfspaces()[0]), "d1 <= 1");
}

TEST(OuterBound, ThreeSingleAntennaUsersRawPermutations) {
  const auto raw = outer_bound_halfspaces(AntennaConfig(3, {1, 1, 1}));
  ASSERT_EQ(raw.size(), 6u);
  // Position i in a permutation sees min(3, 3 - i) antennas: weights 1/3, 1/2, 1.
  std::vector<std::vector<std::size_t>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const RationalVector weight = {Rational(1, 3), Rational(1, 2), Rational(1)};
  for (std::size_t p = 0; p < perms.size(); ++p) {
    RationalVector expected(3);
    for (std::size_t i = 0; i < 3; ++i) expected[perms[p][i]] = weight[i];
    EXPECT_EQ(raw[p].coefficients, expected);
    EXPECT_EQ(raw[p].bound, Rational(1));
  }
}

TEST(TwoUser, WorkedExampleLines) {
  const auto r = two_user_region(4, 3, 2);
  EXPECT_EQ(to_string(r.halfspaces()[0]), "1/4 d1 + 1/2 d2 <= 1");
  EXPECT_EQ(to_string(r.halfspaces()[1]), "1/3 d1 + 1/4 d2 <= 1");
}

TEST(TwoUser, SingleAntennaCollapses) {
  const auto r = two_user_region(1, 1, 1);
  for (const auto& h : r.halfspaces()) EXPECT_EQ(to_string(h), "d1 + d2 <= 1");
}

TEST(TwoUser, MisoTwoByOne) {
  const auto r = two_user_region(2, 1, 1);
  EXPECT_EQ(to_string(r.halfspaces()[0]), "1/2 d1 + d2 <= 1");
  EXPECT_EQ(to_string(r.halfspaces()[1]), "d1 + 1/2 d2 <= 1");
  EXPECT_EQ(point_Q(2, 1, 1).point, (DoFPoint{Rational(2, 3), Rational(2, 3)}));
}

TEST(TwoUser, EqualsOuterBoundEverywhere) {
  for (int n1 = 1; n1 <= 4; ++n1)
    for (int n2 = 1; n2 <= n1; ++n2)
      for (int m = 1; m <= 8; ++m)
        EXPECT_TRUE(regions_equal(outer_bound_region(AntennaConfig(m, {n1, n2})), two_user_region(m, n1, n2)))
            << m << "," << n1 << "," << n2;
}

TEST(ThreeUser, FirstBranchSimplex) {
  const auto r = three_user_region(1, 1);
  ASSERT_EQ(r.halfspaces().size(), 1u);
  EXPECT_EQ(to_string(r.halfspaces()[0]), "d1 + d2 + d3 <= 1");
}

TEST(ThreeUser, SecondBranchInequalities) {
  const auto r = three_user_region(2, 1);
  ASSERT_EQ(r.halfspaces().size(), 3u);
  EXPECT_EQ(to_string(r.halfspaces()[0]), "d1 + d2 + 2 d3 <= 2");
  EXPECT_EQ(to_string(r.halfspaces()[1]), "2 d1 + d2 + d3 <= 2");
  EXPECT_EQ(to_string(r.halfspaces()[2]), "d1 + 2 d2 + d3 <= 2");
}

TEST(ThreeUser, SymmetricVertexSolvesAllThreeEqualities) {
  const RationalVector sym{Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  const auto r = three_user_region(2, 1);
  for (const auto& h : r.halfspaces()) EXPECT_TRUE(h.tight_at(sym));
  // MN/(M+2N) with M=2, N=1.
  EXPECT_EQ(sym[0], Rational(2 * 1, 2 + 2 * 1));
}

TEST(ThreeUser, OutOfScopeRejected) {
  EXPECT_THROW(three_user_region(5, 2), OutOfScopeError);
}

TEST(ThreeUser, EqualsOuterBound) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 2 * n; ++m) {
      const auto outer = outer_bound_region(AntennaConfig(m, {n, n, n}));
      EXPECT_TRUE(regions_equal(outer, three_user_region(m, n))) << m << "," << n;
      if (m <= n) {
        DoFRegion simplex(3, {HalfSpace({1, 1, 1}, Rational(m))});
        EXPECT_TRUE(regions_equal(outer, simplex));
      }
    }
}

TEST(PointQ, WorkedExamples) {
  auto b = point_Q(4, 3, 2);
  EXPECT_EQ(b.which, TwoUserCase::B);
  EXPECT_EQ(b.point, (DoFPoint{Rational(24, 10), Rational(8, 10)}));

  auto c = point_Q(3, 2, 1);
  EXPECT_EQ(c.which, TwoUserCase::C);
  EXPECT_EQ(c.point, (DoFPoint{Rational(12, 7), Rational(3, 7)}));

  auto a = point_Q(1, 1, 1);
  EXPECT_EQ(a.which, TwoUserCase::A);
  EXPECT_FALSE(a.point.has_value());
  EXPECT_EQ(to_string(a.face), "d1 + d2 <= 1");
}

TEST(PointQ, CaseAFaceDominates) {
  for (int n1 = 1; n1 <= 4; ++n1)
    for (int n2 = 1; n2 <= n1; ++n2)
      for (int m = 1; m <= n1; ++m) {
        auto q = point_Q(m, n1, n2);
        ASSERT_EQ(q.which, TwoUserCase::A);
        DoFRegion face_only(2, {q.face});
        EXPECT_TRUE(regions_equal(face_only, two_user_region(m, n1, n2)));
      }
}

TEST(PointQ, LiesOnBothLinesInCasesBC) {
  for (int n1 = 1; n1 <= 4; ++n1)
    for (int n2 = 1; n2 <= n1; ++n2)
      for (int m = n1 + 1; m <= 8; ++m) {
        auto q = point_Q(m, n1, n2);
        ASSERT_TRUE(q.point.has_value());
        const auto r = two_user_region(m, n1, n2);
        EXPECT_TRUE(contains(r, *q.point));
        EXPECT_TRUE(r.halfspaces()[0].tight_at(*q.point));
        EXPECT_TRUE(r.halfspaces()[1].tight_at(*q.point));
      }
}

TEST(SumDof, ClosedForm) {
  EXPECT_EQ(sum_dof_closed_form(2, 1), Rational(4, 3));
  EXPECT_EQ(sum_dof_closed_form(1, 5), Rational(5));
  EXPECT_EQ(sum_dof_closed_form(3, 1), Rational(18, 11));
  EXPECT_THROW(sum_dof_closed_form(0, 1), std::invalid_argument);
}

TEST(SumDof, MatchesLpOverOuterBound) {
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 3; ++n) {
      AntennaConfig cfg(k * n, std::vector<int>(k, n));
      EXPECT_EQ(lp_max(outer_bound_region(cfg), all_ones(k)), sum_dof_closed_form(k, n)) << k << "," << n;
    }
}

TEST(Benchmark, SumDofScalars) {
  EXPECT_EQ(benchmark_sum_dof(AntennaConfig(4, {3, 2}), Csit::perfect), Rational(4));
  EXPECT_EQ(benchmark_sum_dof(AntennaConfig(4, {3, 2}), Csit::none), Rational(3));
  EXPECT_EQ(benchmark_sum_dof(AntennaConfig(1, {1, 1}), Csit::perfect), Rational(1));
  EXPECT_EQ(benchmark_sum_dof(AntennaConfig(1, {1, 1}), Csit::none), Rational(1));
}

TEST(Benchmark, DelayedSitsBetweenNoneAndPerfect) {
  for (int m = 1; m <= 7; ++m) {
    AntennaConfig cfg(m, {3, 2});
    const auto delayed = lp_max(two_user_region(m, 3, 2), all_ones(2));
    EXPECT_LE(benchmark_sum_dof(cfg, Csit::none), delayed);
    EXPECT_LE(delayed, benchmark_sum_dof(cfg, Csit::perfect));
  }
}
