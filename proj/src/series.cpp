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

#include "caylerian/series.hpp"

#include <algorithm>

namespace caylerian {

RatSeries::RatSeries(std::size_t order) : order_(order), coefficients_(order + 1, BigRat(0)) {}

RatSeries::RatSeries(std::size_t order, std::vector<BigRat> coefficients)
    : order_(order), coefficients_(std::move(coefficients)) {
  coefficients_.resize(order + 1, BigRat(0));
  for (auto& c : coefficients_) c.canonicalize();
}

RatSeries RatSeries::constant(std::size_t order, const BigRat& c) {
  RatSeries r(order);
  r.coefficients_[0] = c;
  return r;
}

RatSeries RatSeries::x(std::size_t order) {
  RatSeries r(order);
  if (order >= 1) r.coefficients_[1] = 1;
  return r;
}

RatSeries RatSeries::from_poly(std::size_t order, const IntPoly& p) {
  RatSeries r(order);
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size() && i <= order; ++i) r.coefficients_[i] = BigRat(c[i]);
  return r;
}

RatSeries RatSeries::from_rational(const IntPoly& numer, const IntPoly& denom, std::size_t order) {
  return from_poly(order, numer) * from_poly(order, denom).invert_unit();
}

RatSeries RatSeries::exp_linear(std::size_t order, const BigRat& c) {
  RatSeries r(order);
  BigRat term = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    r.coefficients_[n] = term;
    term = term * c / BigRat(static_cast<long>(n + 1));
    term.canonicalize();
  }
  return r;
}

RatSeries RatSeries::log_one_plus_x(std::size_t order) {
  RatSeries r(order);
  for (std::size_t n = 1; n <= order; ++n) {
    BigRat c(1, static_cast<unsigned long>(n));
    r.coefficients_[n] = (n % 2 == 1) ? c : BigRat(-c);
  }
  return r;
}

namespace {

std::size_t merged_order(const RatSeries& a, const RatSeries& b, bool& reduced) {
  reduced = a.order_reduced() || b.order_reduced() || a.order() != b.order();
  return std::min(a.order(), b.order());
}

}  // namespace

RatSeries& RatSeries::operator+=(const RatSeries& other) {
  bool reduced;
  order_ = merged_order(*this, other, reduced);
  coefficients_.resize(order_ + 1);
  for (std::size_t i = 0; i <= order_; ++i) coefficients_[i] += other.coefficients_[i];
  order_reduced_ = reduced;
  return *this;
}

RatSeries& RatSeries::operator-=(const RatSeries& other) {
  bool reduced;
  order_ = merged_order(*this, other, reduced);
  coefficients_.resize(order_ + 1);
  for (std::size_t i = 0; i <= order_; ++i) coefficients_[i] -= other.coefficients_[i];
  order_reduced_ = reduced;
  return *this;
}

RatSeries& RatSeries::operator*=(const BigRat& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
  bool reduced;
  const std::size_t order = merged_order(a, b, reduced);
  RatSeries r(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) r.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  r.order_reduced_ = reduced;
  return r;
}

RatSeries RatSeries::pow(std::size_t exponent) const {
  RatSeries result = constant(order_, 1);
  RatSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  result.order_reduced_ = order_reduced_;
  return result;
}

RatSeries RatSeries::invert_unit() const {
  if (coefficients_[0] == 0)
    throw SeriesError(SeriesError::Kind::NonunitConstant, "invert_unit: constant term is zero");
  RatSeries r(order_);
  const BigRat inv = 1 / coefficients_[0];
  r.coefficients_[0] = inv;
  for (std::size_t n = 1; n <= order_; ++n) {
    BigRat acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += coefficients_[k] * r.coefficients_[n - k];
    r.coefficients_[n] = -acc * inv;
    r.coefficients_[n].canonicalize();
  }
  r.order_reduced_ = order_reduced_;
  return r;
}

RatSeries RatSeries::compose(const RatSeries& inner) const {
  if (inner.coefficients_[0] != 0)
    throw SeriesError(SeriesError::Kind::NonzeroInnerConstant,
                      "compose: inner series has nonzero constant term " + inner.coefficients_[0].get_str());
  bool reduced;
  const std::size_t order = merged_order(*this, inner, reduced);
  // Horner: f0 + g (f1 + g (f2 + ...)), truncated at each step
  RatSeries trimmed_inner(order, inner.coefficients_);
  RatSeries acc = constant(order, coefficients_[order]);
  for (std::size_t k = order; k-- > 0;) {
    acc = acc * trimmed_inner;
    acc.coefficients_[0] += coefficients_[k];
  }
  acc.order_reduced_ = reduced;
  return acc;
}

RatSeries RatSeries::egf_to_ogf() const {
  RatSeries r = *this;
  for (std::size_t n = 0; n <= order_; ++n) r.coefficients_[n] *= BigRat(factorial(n));
  return r;
}

RatSeries RatSeries::ogf_to_egf() const {
  RatSeries r = *this;
  for (std::size_t n = 0; n <= order_; ++n) {
    r.coefficients_[n] /= BigRat(factorial(n));
    r.coefficients_[n].canonicalize();
  }
  return r;
}

}  // namespace caylerian
