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

#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace caylerian {

using BigInt = mpz_class;
using BigRat = mpq_class;

class IntPoly;

/// Default size bound for the memoized number tables.
inline constexpr std::size_t kDefaultTableBound = 64;

/**
 * Memoized combinatorial number tables.
 *
 * Every table is filled eagerly in the constructor and never mutated
 * afterwards, so a shared instance can be read from any number of threads.
 * Lookups outside the bound throw std::out_of_range.
 */
class NumberTables {
 public:
  explicit NumberTables(std::size_t bound = kDefaultTableBound);

  std::size_t bound() const { return bound_; }

  const BigInt& factorial(std::size_t n) const;
  const BigInt& binomial(std::size_t n, std::size_t k) const;
  // unsigned, first kind: permutations of [n] with k cycles
  const BigInt& stirling1(std::size_t n, std::size_t k) const;
  // set partitions of [n] into k blocks
  const BigInt& stirling2(std::size_t n, std::size_t k) const;
  const BigInt& fubini(std::size_t n) const;

 private:
  void check(std::size_t n) const;

  std::size_t bound_;
  std::vector<BigInt> factorial_;
  std::vector<BigInt> fubini_;
  std::vector<std::vector<BigInt>> binomial_;
  std::vector<std::vector<BigInt>> stirling1_;
  std::vector<std::vector<BigInt>> stirling2_;
  BigInt zero_;
};

/// Process-wide tables built once with kDefaultTableBound.
const NumberTables& tables();

// Free-function front ends. binomial/multichoose/factorial fall back to
// direct computation beyond the table bound; the Stirling and Fubini
// functions throw std::out_of_range there.
BigInt factorial(std::size_t n);
BigInt binomial(std::size_t n, std::size_t k);
BigInt multichoose(std::size_t m, std::size_t n);
BigInt stirling1(std::size_t n, std::size_t k);
BigInt stirling2(std::size_t n, std::size_t k);
BigInt fubini(std::size_t n);

/// n! / prod(parts!) where the parts sum to n.
BigInt multinomial(const std::vector<std::size_t>& parts);

/// sum_i S(n,i) i! t^i: ballots of [n] with each block marked by t.
IntPoly ballot_block_poly(std::size_t n);

/// Exact quotient; throws std::logic_error if the division leaves a remainder.
BigInt exact_divide(const BigInt& numerator, const BigInt& denominator);

/// Converts an integral rational to BigInt; throws std::logic_error otherwise.
BigInt to_integer(const BigRat& value);

}  // namespace caylerian
