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

#include <random>

#include "doflab/rational.hpp"

using doflab::Rational;

TEST(Rational, LowestTermsPositiveDenominator) {
  Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(24, 10).str(), "12/5");
  EXPECT_EQ(Rational(8, 4).str(), "2");
}

TEST(Rational, ExactArithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) * Rational(3, 7), Rational(1, 7));
  EXPECT_EQ(Rational(1, 2) - Rational(3, 4), Rational(-1, 4));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational::parse("3/0"), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("12/5"), Rational(12, 5));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("4/6").str(), "2/3");
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("a/2"), std::invalid_argument);
  EXPECT_EQ(doflab::parse_vector("12/5,4/5"), (doflab::RationalVector{Rational(12, 5), Rational(4, 5)}));
}

// Rendering then parsing is the identity on random rationals.
TEST(Rational, StrParseRoundTripProperty) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
  for (int i = 0; i < 500; ++i) {
    Rational r(num(rng), den(rng));
    EXPECT_EQ(Rational::parse(r.str()), r);
  }
}
