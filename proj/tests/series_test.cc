// Copyright 2026 The permx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "permx/series.h"

#include <random>

#include "gtest/gtest.h"
#include "permx/error.h"

namespace permx {
namespace {

const Polynomial kOneMinusX{1, -1};
Polynomial X(int e) { return Polynomial::Monomial(1, e); }

Polynomial RandomPolynomial(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> degree(-1, max_degree), coeff(-9, 9);
  std::vector<Integer> c(degree(rng) + 1);
  for (auto& v : c) v = coeff(rng);
  return Polynomial(std::move(c));
}

// Random f with unit constant denominator term.
RationalGF RandomGf(std::mt19937& rng) {
  Polynomial den = RandomPolynomial(rng, 4) * X(1) + Polynomial::One();
  return RationalGF(RandomPolynomial(rng, 5), den);
}

TEST(SeriesTest, PolynomialArithmetic) {
  EXPECT_EQ(kOneMinusX * Polynomial({1, 1}), (Polynomial{1, 0, -1}));
  EXPECT_EQ(kOneMinusX + Polynomial(), kOneMinusX);
  EXPECT_EQ(Polynomial::Monomial(-2, 3).coefficients(),
            (std::vector<Integer>{0, 0, 0, -2}));
  EXPECT_TRUE((kOneMinusX - kOneMinusX).IsZero());
  EXPECT_EQ((kOneMinusX - kOneMinusX).Degree(), -1);
  EXPECT_EQ(Pow(kOneMinusX, 3), (Polynomial{1, -3, 3, -1}));
  EXPECT_EQ(ExactQuotient(Polynomial({1, 0, -1}), kOneMinusX), (Polynomial{1, 1}));
  EXPECT_THROW(ExactQuotient(Polynomial{1, 0, 1}, kOneMinusX), Error);
}

TEST(SeriesTest, PolynomialGcd) {
  const Polynomial a = Pow(kOneMinusX, 2) * Polynomial{1, -1, -1};
  const Polynomial b = kOneMinusX * Polynomial{1, 2} * Polynomial{3};
  EXPECT_EQ(Gcd(a, b), (Polynomial{-1, 1}));
  EXPECT_EQ(Gcd(Polynomial({2, 4}), Polynomial({3, 6})), (Polynomial{1, 2}));
}

TEST(SeriesTest, PolynomialToString) {
  EXPECT_EQ((Polynomial{1, -2, 0, 1}).ToString(), "1 - 2x + x^3");
  EXPECT_EQ((Polynomial{1, -2, 0, 1}).ToString(true), "1-2x+x^3");
  EXPECT_EQ((Polynomial{0, 0, 0, 1, 4, 2}).ToString(), "x^3 + 4x^4 + 2x^5");
  EXPECT_EQ(Polynomial().ToString(), "0");
  EXPECT_EQ(Polynomial::Monomial(-2, 3).ToString(), "-2x^3");
}

TEST(SeriesTest, GfArithmetic) {
  const RationalGF geometric(X(3), kOneMinusX);
  EXPECT_EQ(geometric + RationalGF(X(3)), RationalGF(Polynomial{0, 0, 0, 2, -1}, kOneMinusX));
  const RationalGF f(X(1), kOneMinusX);
  EXPECT_EQ(f * f, RationalGF(X(2), Pow(kOneMinusX, 2)));
  EXPECT_EQ(RationalGF(Polynomial::One(), kOneMinusX).ScaledBy(X(2)), RationalGF(X(2), kOneMinusX));
}

TEST(SeriesTest, GfCanonicalForm) {
  // (1 - 2x + x^3) = (1 - x)(1 - x - x^2)
  const RationalGF f(X(3) * kOneMinusX, Polynomial{1, -2, 0, 1});
  EXPECT_EQ(f.den(), (Polynomial{1, -1, -1}));
  EXPECT_EQ(f.num(), X(3));
  const RationalGF g(Polynomial{0, 2}, Polynomial{-2, 2});
  EXPECT_EQ(g.den(), kOneMinusX);
  EXPECT_EQ(g.num(), (Polynomial{0, -1}));
  EXPECT_EQ(g.den().Coefficient(0), 1);
  EXPECT_THROW(RationalGF(Polynomial::One(), Polynomial{2, 1}), Error);
  EXPECT_THROW(RationalGF(Polynomial::One(), Polynomial()), Error);
}

TEST(SeriesTest, GfToString) {
  struct {
    RationalGF gf;
    const char* expected;
  } kTestCases[]{
      {RationalGF(X(3), Pow(kOneMinusX, 2)), "x^3/(1-x)^2"},
      {RationalGF(X(3), Pow(Polynomial{1, -1, -1}, 2)), "x^3/(1-x-x^2)^2"},
      {RationalGF(X(4) * Polynomial{1, 1}, kOneMinusX), "x^4(1+x)/(1-x)"},
      {RationalGF(Polynomial{0, 0, 0, 1, 4, 2}), "x^3 + 4x^4 + 2x^5"},
      {RationalGF(X(5), Pow(kOneMinusX, 2) * Polynomial{1, -1, -1}), "x^5/((1-x)^2(1-x-x^2))"},
      {RationalGF(Polynomial::One(), Polynomial{1, -2}), "1/(1-2x)"},
      {RationalGF(), "0"},
  };
  for (const auto& t : kTestCases) EXPECT_EQ(t.gf.ToString(), t.expected);
}

TEST(SeriesTest, Expand) {
  EXPECT_EQ(RationalGF(X(3), Pow(kOneMinusX, 2)).Expand(6),
            TruncatedSeries::FromCounts(std::vector<int>{0, 0, 0, 1, 2, 3, 4}));
  EXPECT_EQ(RationalGF(X(3), Pow(Polynomial{1, -1, -1}, 2)).Expand(8),
            TruncatedSeries::FromCounts(std::vector<int>{0, 0, 0, 1, 2, 5, 10, 20, 38}));
  EXPECT_EQ(RationalGF(Polynomial{0, 0, 0, 1, 3}).Expand(5),
            TruncatedSeries::FromCounts(std::vector<int>{0, 0, 0, 1, 3, 0}));
}

TEST(SeriesTest, TruncatedSeriesOps) {
  const auto ones = TruncatedSeries::FromCounts(std::vector<int>{1, 1, 1});
  EXPECT_EQ(ones * ones, TruncatedSeries::FromCounts(std::vector<int>{1, 2, 3}));
  EXPECT_EQ(ones + TruncatedSeries(2), ones);
  const auto b = TruncatedSeries::FromCounts(std::vector<int>{0, 0, 0, 1, 4, 2});
  EXPECT_EQ(b[3], 1);
  EXPECT_EQ(b[4], 4);
  EXPECT_EQ(b[5], 2);
  // The longer operand is truncated.
  EXPECT_EQ((b + ones).order(), 2);
  EXPECT_EQ(b.ToString(), "[0, 0, 0, 1, 4, 2]");
}

TEST(SeriesTest, ExactBeyondMachineWords) {
  const auto s = RationalGF(Polynomial::One(), Polynomial{1, -3}).Expand(80);
  EXPECT_EQ(s[80], boost::multiprecision::pow(Integer(3), 80));
}

TEST(SeriesTest, RandomizedRingLaws) {
  std::mt19937 rng(20261016);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = RandomPolynomial(rng, 6), q = RandomPolynomial(rng, 6),
                     r = RandomPolynomial(rng, 6);
    ASSERT_EQ((p + q) + r, p + (q + r));
    ASSERT_EQ(p + q, q + p);
    ASSERT_EQ((p * q) * r, p * (q * r));
    ASSERT_EQ(p * q, q * p);
    ASSERT_EQ(p * (q + r), p * q + p * r);
    const RationalGF f = RandomGf(rng), g = RandomGf(rng), h = RandomGf(rng);
    ASSERT_EQ((f + g) + h, f + (g + h));
    ASSERT_EQ(f * g, g * f);
    ASSERT_EQ(f * (g + h), f * g + f * h);
    const auto s = f.Expand(12), t = g.Expand(12), u = h.Expand(12);
    ASSERT_EQ((s * t) * u, s * (t * u));
    ASSERT_EQ(s * (t + u), s * t + s * u);
  }
}

TEST(SeriesTest, RandomizedExpandConsistency) {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const RationalGF f = RandomGf(rng), g = RandomGf(rng);
    for (int order : {0, 5, 12, 20}) {
      const TruncatedSeries s = f.Expand(order);
      // den * s == num (mod x^(order+1))
      const TruncatedSeries den = RationalGF(f.den()).Expand(order);
      ASSERT_EQ(den * s, RationalGF(f.num()).Expand(order));
      ASSERT_EQ((f * g).Expand(order), f.Expand(order) * g.Expand(order));
      ASSERT_EQ((f + g).Expand(order), f.Expand(order) + g.Expand(order));
    }
  }
}

}  // namespace
}  // namespace permx
