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

#include "caylerian/numbers.hpp"

#include <stdexcept>
#include <string>

#include "caylerian/poly.hpp"

namespace caylerian {

NumberTables::NumberTables(std::size_t bound) : bound_(bound), zero_(0) {
  const std::size_t size = bound + 1;
  factorial_.resize(size);
  factorial_[0] = 1;
  for (std::size_t n = 1; n < size; ++n) factorial_[n] = factorial_[n - 1] * n;

  binomial_.assign(size, std::vector<BigInt>(size, BigInt(0)));
  stirling1_.assign(size, std::vector<BigInt>(size, BigInt(0)));
  stirling2_.assign(size, std::vector<BigInt>(size, BigInt(0)));
  binomial_[0][0] = stirling1_[0][0] = stirling2_[0][0] = 1;
  for (std::size_t n = 1; n < size; ++n) {
    binomial_[n][0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      binomial_[n][k] = binomial_[n - 1][k - 1] + binomial_[n - 1][k];
      stirling1_[n][k] = stirling1_[n - 1][k - 1] + (n - 1) * stirling1_[n - 1][k];
      stirling2_[n][k] = stirling2_[n - 1][k - 1] + k * stirling2_[n - 1][k];
    }
  }

  fubini_.assign(size, BigInt(0));
  for (std::size_t n = 0; n < size; ++n)
    for (std::size_t k = 0; k <= n; ++k) fubini_[n] += stirling2_[n][k] * factorial_[k];
}

void NumberTables::check(std::size_t n) const {
  if (n > bound_)
    throw std::out_of_range("number table bound " + std::to_string(bound_) + " exceeded by " +
                            std::to_string(n));
}

const BigInt& NumberTables::factorial(std::size_t n) const {
  check(n);
  return factorial_[n];
}

const BigInt& NumberTables::binomial(std::size_t n, std::size_t k) const {
  check(n);
  return k > n ? zero_ : binomial_[n][k];
}

const BigInt& NumberTables::stirling1(std::size_t n, std::size_t k) const {
  check(n);
  return k > n ? zero_ : stirling1_[n][k];
}

const BigInt& NumberTables::stirling2(std::size_t n, std::size_t k) const {
  check(n);
  return k > n ? zero_ : stirling2_[n][k];
}

const BigInt& NumberTables::fubini(std::size_t n) const {
  check(n);
  return fubini_[n];
}

const NumberTables& tables() {
  static const NumberTables instance;
  return instance;
}

BigInt factorial(std::size_t n) {
  if (n <= tables().bound()) return tables().factorial(n);
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (n <= tables().bound()) return tables().binomial(n, k);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt multichoose(std::size_t m, std::size_t n) {
  if (m == 0) return n == 0 ? 1 : 0;
  return binomial(m + n - 1, n);
}

BigInt stirling1(std::size_t n, std::size_t k) { return tables().stirling1(n, k); }
BigInt stirling2(std::size_t n, std::size_t k) { return tables().stirling2(n, k); }
BigInt fubini(std::size_t n) { return tables().fubini(n); }

BigInt multinomial(const std::vector<std::size_t>& parts) {
  std::size_t n = 0;
  BigInt denominator = 1;
  for (std::size_t p : parts) {
    n += p;
    denominator *= factorial(p);
  }
  return exact_divide(factorial(n), denominator);
}

IntPoly ballot_block_poly(std::size_t n) {
  std::vector<BigInt> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = stirling2(n, i) * factorial(i);
  return IntPoly(std::move(c));
}

BigInt exact_divide(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::logic_error("exact_divide: division by zero");
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
    throw std::logic_error("exact_divide: " + numerator.get_str() + " is not divisible by " +
                           denominator.get_str());
  BigInt q;
  mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return q;
}

BigInt to_integer(const BigRat& value) {
  BigRat v = value;
  v.canonicalize();
  if (v.get_den() != 1) throw std::logic_error("to_integer: " + v.get_str() + " is not an integer");
  return v.get_num();
}

}  // namespace caylerian
