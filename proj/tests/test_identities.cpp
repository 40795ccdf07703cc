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

#include "caylerian/burge.hpp"
#include "caylerian/identities.hpp"
#include "caylerian/verify.hpp"

using namespace caylerian;

TEST(CountGenmat, KnownValues) {
  EXPECT_EQ(count_genmat(2, 2, false, CountMethod::Compositions), 7);
  EXPECT_EQ(count_genmat(2, 2, true, CountMethod::Compositions), 5);
  EXPECT_EQ(count_genmat(1, 5, false, CountMethod::Stirling), 16);
  EXPECT_EQ(count_genmat(0, 0, false, CountMethod::InclExcl), 1);
  EXPECT_EQ(count_genmat(0, 3, true, CountMethod::OgfCoefficient), 0);
  EXPECT_THROW(count_genmat(2, 2, false, CountMethod::DoubleSum), std::invalid_argument);
}

TEST(CountGenmat, MethodsAgree) {
  for (std::size_t m = 0; m <= 5; ++m)
    for (std::size_t n = 0; n <= 7; ++n)
      for (bool binary : {false, true}) {
        const BigInt ref = count_genmat(m, n, binary, CountMethod::Compositions);
        EXPECT_EQ(count_genmat(m, n, binary, CountMethod::Stirling), ref) << m << " " << n;
        EXPECT_EQ(count_genmat(m, n, binary, CountMethod::InclExcl), ref) << m << " " << n;
        EXPECT_EQ(count_genmat(m, n, binary, CountMethod::OgfCoefficient), ref) << m << " " << n;
      }
}

TEST(CountMethod, Names) {
  for (auto m : {CountMethod::Compositions, CountMethod::Stirling, CountMethod::InclExcl, CountMethod::OgfCoefficient,
                 CountMethod::Enumerate, CountMethod::DoubleSum})
    EXPECT_EQ(parse_count_method(to_string(m)), m);
  EXPECT_THROW(parse_count_method("magic"), std::invalid_argument);
}

TEST(CountMat, KnownValues) {
  EXPECT_EQ(count_mat(3, false, CountMethod::Stirling), 33);
  EXPECT_EQ(count_mat(3, true, CountMethod::Stirling), 24);
  EXPECT_EQ(count_mat(4, false, CountMethod::Enumerate), 281);
  EXPECT_THROW(count_mat(3, false, CountMethod::Compositions), std::invalid_argument);
}

TEST(DoubleSum, CertifiedRounding) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (bool binary : {false, true}) {
      const CertifiedSum s = mat_double_sum(n, binary);
      EXPECT_EQ(s.rounded, count_mat(n, binary, CountMethod::Stirling)) << n;
      EXPECT_LT(s.tail_bound, BigRat(1, 2));
      EXPECT_LE(s.partial, BigRat(s.rounded));
      EXPECT_GE(s.partial + s.tail_bound, BigRat(s.rounded));
    }
}

TEST(DoubleSum, UnconvergedWhenIndexTooSmall) {
  EXPECT_THROW(mat_double_sum(8, false, 16), UnconvergedError);
}

TEST(HalvingSum, MatchesMatrixCounts) {
  for (std::size_t n = 0; n <= 5; ++n) {
    EXPECT_EQ(halving_sum(n, false, BigRat(1, 4)).rounded, count_mat(n, false, CountMethod::Stirling));
    EXPECT_EQ(halving_sum(n, true, BigRat(1, 4)).rounded, count_mat(n, true, CountMethod::Stirling));
  }
  EXPECT_THROW(halving_sum(6, false, BigRat(1, 4), 8), UnconvergedError);
}

TEST(Polynomials, Caylerian) {
  EXPECT_EQ(caylerian_formula(3, false), (IntPoly{1, 8, 4}));
  EXPECT_EQ(caylerian_formula(3, true), (IntPoly{4, 8, 1}));
  EXPECT_EQ(caylerian_formula(0, false), IntPoly{1});
  EXPECT_EQ(caylerian_formula(4, false).eval_at(1), 75);
}

TEST(Polynomials, TwoSided) {
  EXPECT_EQ(two_sided_formula(2, true).to_string(), "{(1,2):1,(2,1):1,(2,2):2}");
  for (std::size_t n = 0; n <= 4; ++n)
    for (bool strict : {false, true}) {
      EXPECT_EQ(two_sided_formula(n, strict), two_sided_brute(n, strict));
      EXPECT_EQ(two_sided_to_caylerian(two_sided_formula(n, strict), n), caylerian_formula(n, strict));
    }
}

TEST(Beta, SmallSets) {
  const AscentSetSpec s(3, {1});
  EXPECT_EQ(beta_formula(s, false), beta_brute(s, false, AscentMode::Subset));
  EXPECT_EQ(beta_formula(s, true), beta_brute(s, true, AscentMode::Subset));
  EXPECT_EQ(lambda_inclexcl(s, true), beta_brute(s, true, AscentMode::Equal));
  EXPECT_EQ(beta_formula(s, true), BigInt(static_cast<unsigned long>(enumerate_mat(3, false, s).size())));
}

TEST(SeriesExpansion, Coefficients) {
  // t C_2(t) / (1-t)^3 = t + 5t^2 + 12t^3 + ...
  const auto weak = carlitz_series(2, false, 3);
  EXPECT_EQ(weak, (std::vector<BigInt>{1, 5, 12}));
  const auto strict = carlitz_series(2, true, 3);
  EXPECT_EQ(strict, (std::vector<BigInt>{2, 7, 15}));
}

TEST(Pairing, GridDeterminesSwappedPairing) {
  const PairingReport r = pairing_check(6, 8);
  EXPECT_EQ(r.conclusion, Pairing::Swapped);
  EXPECT_FALSE(r.contradiction.has_value());
  bool found = false;
  for (const auto& c : r.cells)
    if (c.n == 2 && c.m == 2) {
      found = true;
      EXPECT_EQ(c.weak_coefficient, 5);
      EXPECT_EQ(c.strict_coefficient, 7);
      EXPECT_EQ(c.general_count, 7);
      EXPECT_EQ(c.binary_count, 5);
      EXPECT_FALSE(c.as_printed_holds);
      EXPECT_TRUE(c.swapped_holds);
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(r.as_check().status, CheckStatus::Pass);
}

TEST(Pairing, DegenerateGridIsUndetermined) {
  const PairingReport r = pairing_check(0, 3);
  EXPECT_EQ(r.conclusion, Pairing::Both);
  EXPECT_EQ(r.as_check().status, CheckStatus::Pass);
}

TEST(Report, RecorderKeepsFirstWitness) {
  CheckRecorder rec("demo", "n<=2");
  EXPECT_TRUE(rec.expect_equal("n=0", BigInt(1), BigInt(1)));
  EXPECT_FALSE(rec.expect_equal("n=1", BigInt(2), BigInt(3)));
  EXPECT_FALSE(rec.expect_equal("n=2", BigInt(4), BigInt(5)));
  const CheckResult r = rec.finish();
  EXPECT_EQ(r.status, CheckStatus::Fail);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->params, "n=1");
  EXPECT_EQ(r.witness->expected, "2");
  EXPECT_EQ(r.witness->actual, "3");
}

TEST(Report, MergeAndStatus) {
  VerificationReport a, b;
  CheckRecorder ok("ok", "");
  a.checks.push_back(ok.finish());
  CheckRecorder slow("slow", "");
  slow.unconverged("tail too large");
  b.checks.push_back(slow.finish());
  a.merge(b);
  EXPECT_EQ(a.checks.size(), 2u);
  EXPECT_TRUE(a.any_unconverged());
  EXPECT_FALSE(a.all_passed());
}

TEST(Suites, NamesAndUnknown) {
  EXPECT_EQ(suite_names().size(), 6u);
  EXPECT_THROW(run_suite("nope", SuiteBounds{}), std::invalid_argument);
  const VerificationReport r = run_suite("all", SuiteBounds{0, 0, 0, 0});
  EXPECT_TRUE(r.all_passed());
}

TEST(Suites, DefaultBoundsPass) {
  SuiteBounds b{4, 2, 6, 4};
  for (const auto& name : suite_names()) {
    const VerificationReport r = run_suite(name, b);
    for (const auto& c : r.checks) EXPECT_EQ(c.status, CheckStatus::Pass) << name << ": " << c.name << " " << c.detail;
  }
}
