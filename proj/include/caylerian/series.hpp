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
#include <stdexcept>
#include <string>
#include <vector>

#include "caylerian/numbers.hpp"
#include "caylerian/poly.hpp"

namespace caylerian {

/// Precondition failures of the series engine.
class SeriesError : public std::domain_error {
 public:
  enum class Kind {
    NonzeroInnerConstant,  // compose(F, G) with G(0) != 0
    NonunitConstant,       // inversion of a series with zero constant term
  };

  SeriesError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/**
 * Power series with exact rational coefficients, truncated at x^order.
 *
 * Binary operations on series of different order produce a result of the
 * smaller order and set order_reduced() on it.
 */
class RatSeries {
 public:
  explicit RatSeries(std::size_t order);
  RatSeries(std::size_t order, std::vector<BigRat> coefficients);

  static RatSeries constant(std::size_t order, const BigRat& c);
  static RatSeries x(std::size_t order);
  static RatSeries from_poly(std::size_t order, const IntPoly& p);
  /// numer/denom expanded through x^order; denom(0) must be nonzero.
  static RatSeries from_rational(const IntPoly& numer, const IntPoly& denom, std::size_t order);
  /// e^{c x}
  static RatSeries exp_linear(std::size_t order, const BigRat& c);
  /// log(1 + x)
  static RatSeries log_one_plus_x(std::size_t order);

  std::size_t order() const { return order_; }
  bool order_reduced() const { return order_reduced_; }
  const BigRat& operator[](std::size_t n) const { return coefficients_.at(n); }
  const std::vector<BigRat>& coefficients() const { return coefficients_; }

  RatSeries& operator+=(const RatSeries& other);
  RatSeries& operator-=(const RatSeries& other);
  RatSeries& operator*=(const BigRat& scalar);
  friend RatSeries operator+(RatSeries a, const RatSeries& b) { return a += b; }
  friend RatSeries operator-(RatSeries a, const RatSeries& b) { return a -= b; }
  friend RatSeries operator*(RatSeries a, const BigRat& s) { return a *= s; }
  friend RatSeries operator*(const RatSeries& a, const RatSeries& b);
  friend bool operator==(const RatSeries& a, const RatSeries& b) {
    return a.order_ == b.order_ && a.coefficients_ == b.coefficients_;
  }

  RatSeries pow(std::size_t exponent) const;
  /// 1 / self; throws SeriesError(NonunitConstant) when self(0) == 0.
  RatSeries invert_unit() const;
  /// self(inner(x)); throws SeriesError(NonzeroInnerConstant) when inner(0) != 0.
  RatSeries compose(const RatSeries& inner) const;

  /// Coefficient n multiplied by n! (EGF coefficients to counts).
  RatSeries egf_to_ogf() const;
  /// Coefficient n divided by n!.
  RatSeries ogf_to_egf() const;

 private:
  std::size_t order_;
  std::vector<BigRat> coefficients_;
  bool order_reduced_ = false;
};

}  // namespace caylerian
