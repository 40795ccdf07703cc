/*
   Copyright 2026 The caylerian Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <stdexcept>

#include "caylerian/numbers.hpp"
#include "caylerian/poly.hpp"
#include "caylerian/series.hpp"

using namespace caylerian;

TEST(Numbers, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 5), 0);
  EXPECT_EQ(stirling1(4, 2), 11);
  EXPECT_EQ(stirling1(0, 0), 1);
  EXPECT_EQ(stirling1(3, 0), 0);
  EXPECT_EQ(stirling2(5, 3), 25);
  EXPECT_EQ(stirling2(4, 5), 0);
}

TEST(Numbers, FubiniSequence) {
  const long expected[] = {1, 1, 3, 13, 75, 541, 4683, 47293, 545835};
  for (std::size_t n = 0; n < 9; ++n) EXPECT_EQ(fubini(n), expected[n]) << "n=" << n;
}

TEST(Numbers, Multichoose) {
  EXPECT_EQ(multichoose(0, 0), 1);
  EXPECT_EQ(multichoose(0, 3), 0);
  EXPECT_EQ(multichoose(3, 0), 1);
  EXPECT_EQ(multichoose(2, 2), 3);
  EXPECT_EQ(multichoose(4, 3), 20);
}

TEST(Numbers, BinomialBeyondTable) {
  // 100 choose 50, outside the memoized range
  EXPECT_EQ(binomial(100, 50), BigInt("100891344545564193334812497256"));
  EXPECT_EQ(binomial(100, 50), binomial(99, 49) + binomial(99, 50));
}

TEST(Numbers, Multinomial) {
  EXPECT_EQ(multinomial({2, 1, 1}), 12);
  EXPECT_EQ(multinomial({}), 1);
  EXPECT_EQ(multinomial({0, 3}), 1);
}

TEST(Numbers, TableBounds) {
  NumberTables t(6);
  EXPECT_EQ(t.fubini(6), 4683);
  EXPECT_THROW(t.fubini(7), std::out_of_range);
  EXPECT_THROW(t.stirling2(7, 1), std::out_of_range);
  EXPECT_EQ(t.binomial(3, 5), 0);
}

TEST(Numbers, ExactDivision) {
  EXPECT_EQ(exact_divide(BigInt(84), BigInt(7)), 12);
  EXPECT_THROW(exact_divide(BigInt(85), BigInt(7)), std::logic_error);
  EXPECT_EQ(to_integer(BigRat(14, 7)), 2);
  EXPECT_THROW(to_integer(BigRat(1, 2)), std::logic_error);
}

TEST(Numbers, BallotBlockPoly) {
  // sum_i S(3,i) i! t^i = t + 6t^2 + 6t^3
  EXPECT_EQ(ballot_block_poly(3), (IntPoly{0, 1, 6, 6}));
  EXPECT_EQ(ballot_block_poly(0), IntPoly{1});
}

TEST(IntPoly, Arithmetic) {
  const IntPoly p{1, 2};     // 1 + 2t
  const IntPoly q{-1, 0, 1}; // t^2 - 1
  EXPECT_EQ(p * q, (IntPoly{-1, -2, 1, 2}));
  EXPECT_EQ(p + q, (IntPoly{0, 2, 1}));
  EXPECT_EQ(q - q, IntPoly{});
  EXPECT_EQ((q - q).degree(), -1);
  EXPECT_TRUE((q - q).is_zero());
  EXPECT_EQ(IntPoly({1, 0, 0}).degree(), 0);
  EXPECT_EQ(IntPoly::linear_power(-1, 3), (IntPoly{-1, 3, -3, 1}));
  EXPECT_EQ(IntPoly::monomial(5, 2), (IntPoly{0, 0, 5}));
}

TEST(IntPoly, EvalReverseDivide) {
  const IntPoly p{1, 8, 4};
  EXPECT_EQ(p.eval_at(2), 33);
  EXPECT_EQ(p.eval_at(BigRat(1, 2)), 6);
  EXPECT_EQ(p.reverse_coefficients(2), (IntPoly{4, 8, 1}));
  EXPECT_EQ(p.reverse_coefficients(3), (IntPoly{0, 4, 8, 1}));
  EXPECT_THROW(p.reverse_coefficients(1), std::domain_error);
  EXPECT_EQ((IntPoly{4, 8}).divide_exact(4), (IntPoly{1, 2}));
  EXPECT_THROW(p.divide_exact(4), std::logic_error);
  EXPECT_EQ(p.to_string(), "[1, 8, 4]");
  EXPECT_EQ(IntPoly{}.to_string(), "[]");
}

TEST(BiPoly, OuterAndEval) {
  const BiPoly p = BiPoly::outer(IntPoly{0, 1}, IntPoly{1, 1});  // s(1 + t)
  EXPECT_EQ(p.coefficient(1, 0), 1);
  EXPECT_EQ(p.coefficient(1, 1), 1);
  EXPECT_EQ(p.coefficient(0, 0), 0);
  EXPECT_EQ(p.eval(2, 3), 8);
  EXPECT_EQ(p.eval_s(2), (IntPoly{2, 2}));
  BiPoly q = p;
  q -= p;
  EXPECT_TRUE(q.is_zero());
  EXPECT_EQ(p.to_string(), "{(1,0):1,(1,1):1}");
}

TEST(RatSeries, ExpLog) {
  const std::size_t order = 10;
  const RatSeries e = RatSeries::exp_linear(order, 1);
  EXPECT_EQ(e * RatSeries::exp_linear(order, -1), RatSeries::constant(order, 1));
  // log(1 + (e^x - 1)) = x
  const RatSeries inner = e - RatSeries::constant(order, 1);
  EXPECT_EQ(RatSeries::log_one_plus_x(order).compose(inner), RatSeries::x(order));
  EXPECT_EQ(e[3], BigRat(1, 6));
}

TEST(RatSeries, InverseAndErrors) {
  const std::size_t order = 8;
  const RatSeries one_minus_x = RatSeries::constant(order, 1) - RatSeries::x(order);
  const RatSeries geometric = one_minus_x.invert_unit();
  for (std::size_t n = 0; n <= order; ++n) EXPECT_EQ(geometric[n], 1);
  EXPECT_EQ(one_minus_x.pow(2) * geometric.pow(2), RatSeries::constant(order, 1));
  try {
    RatSeries::x(order).invert_unit();
    FAIL() << "expected SeriesError";
  } catch (const SeriesError& e) {
    EXPECT_EQ(e.kind(), SeriesError::Kind::NonunitConstant);
  }
  try {
    geometric.compose(one_minus_x);
    FAIL() << "expected SeriesError";
  } catch (const SeriesError& e) {
    EXPECT_EQ(e.kind(), SeriesError::Kind::NonzeroInnerConstant);
  }
}

TEST(RatSeries, MixedOrders) {
  const RatSeries a = RatSeries::exp_linear(5, 1);
  const RatSeries b = RatSeries::exp_linear(3, 1);
  const RatSeries c = a + b;
  EXPECT_EQ(c.order(), 3u);
  EXPECT_TRUE(c.order_reduced());
  EXPECT_FALSE(a.order_reduced());
}

TEST(RatSeries, FromRational) {
  // 1/(1 - x - x^2): Fibonacci
  const RatSeries f = RatSeries::from_rational(IntPoly{1}, IntPoly{1, -1, -1}, 10);
  EXPECT_EQ(f[10], 89);
  EXPECT_THROW(RatSeries::from_rational(IntPoly{1}, IntPoly{0, 1}, 4), SeriesError);
}

TEST(RatSeries, EgfOgf) {
  const RatSeries e = RatSeries::exp_linear(6, 1);
  const RatSeries ones = e.egf_to_ogf();
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(ones[n], 1);
  EXPECT_EQ(ones.ogf_to_egf(), e);
}
