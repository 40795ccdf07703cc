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
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "caylerian/numbers.hpp"

namespace caylerian {

/**
 * Dense univariate polynomial with BigInt coefficients, ascending degree.
 *
 * The coefficient vector never ends in a zero, so the zero polynomial is
 * the empty vector and degree() returns -1 for it.
 */
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coefficients);
  explicit IntPoly(std::vector<BigInt> coefficients);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);
  /// (t + shift)^exponent
  static IntPoly linear_power(long shift, std::size_t exponent);

  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  BigInt coefficient(std::size_t degree) const;
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  BigRat eval_at(const BigRat& t) const;

  /// t^deg p(1/t). Throws std::domain_error if degree() > deg.
  IntPoly reverse_coefficients(std::size_t deg) const;

  /// Divides every coefficient exactly; throws std::logic_error on a remainder.
  IntPoly divide_exact(const BigInt& divisor) const;

  std::string to_string() const;

 private:
  void normalize();

  std::vector<BigInt> coefficients_;
};

/// Sparse bivariate polynomial in (s, t): exponent pair -> nonzero coefficient.
class BiPoly {
 public:
  using Exponents = std::pair<std::size_t, std::size_t>;
  using Terms = std::map<Exponents, BigInt>;

  BiPoly() = default;
  explicit BiPoly(Terms terms);

  /// p(s) * q(t)
  static BiPoly outer(const IntPoly& in_s, const IntPoly& in_t);

  const Terms& terms() const { return terms_; }
  BigInt coefficient(std::size_t deg_s, std::size_t deg_t) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::size_t deg_s, std::size_t deg_t, const BigInt& c);

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BigInt& scalar);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const BigInt& s) { return a *= s; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Substitutes s = value, leaving a polynomial in t.
  IntPoly eval_s(const BigInt& value) const;
  BigRat eval(const BigRat& s, const BigRat& t) const;

  BiPoly divide_exact(const BigInt& divisor) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Free-function alias matching the operation name used across the tools.
inline IntPoly bipoly_eval_partial(const BiPoly& p, const BigInt& s) { return p.eval_s(s); }

}  // namespace caylerian
