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

#include "caylerian/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace caylerian {

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coefficients_.emplace_back(c);
  normalize();
}

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_power(long shift, std::size_t exponent) {
  // binomial expansion of (t + shift)^exponent
  std::vector<BigInt> v(exponent + 1);
  BigInt shift_power = 1;
  for (std::size_t j = 0; j <= exponent; ++j) {
    v[exponent - j] = binomial(exponent, j) * shift_power;
    shift_power *= shift;
  }
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt IntPoly::coefficient(std::size_t degree) const {
  return degree < coefficients_.size() ? coefficients_[degree] : BigInt(0);
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coefficients_.size() > coefficients_.size())
    coefficients_.resize(other.coefficients_.size(), BigInt(0));
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
    coefficients_[i] += other.coefficients_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coefficients_.size() > coefficients_.size())
    coefficients_.resize(other.coefficients_.size(), BigInt(0));
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
    coefficients_[i] -= other.coefficients_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coefficients_.size() + b.coefficients_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
      v[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return IntPoly(std::move(v));
}

BigRat IntPoly::eval_at(const BigRat& t) const {
  BigRat acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * t + BigRat(*it);
    acc.canonicalize();
  }
  return acc;
}

IntPoly IntPoly::reverse_coefficients(std::size_t deg) const {
  if (degree() > static_cast<long>(deg))
    throw std::domain_error("reverse_coefficients: degree " + std::to_string(degree()) +
                            " exceeds " + std::to_string(deg));
  std::vector<BigInt> v(deg + 1, BigInt(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) v[deg - i] = coefficients_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::divide_exact(const BigInt& divisor) const {
  std::vector<BigInt> v;
  v.reserve(coefficients_.size());
  for (const auto& c : coefficients_) v.push_back(exact_divide(c, divisor));
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coefficients_.size(); ++i) os << (i ? ", " : "") << coefficients_[i];
  os << ']';
  return os.str();
}

BiPoly::BiPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

BiPoly BiPoly::outer(const IntPoly& in_s, const IntPoly& in_t) {
  BiPoly r;
  const auto& a = in_s.coefficients();
  const auto& b = in_t.coefficients();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r.add_term(i, j, a[i] * b[j]);
  return r;
}

BigInt BiPoly::coefficient(std::size_t deg_s, std::size_t deg_t) const {
  auto it = terms_.find({deg_s, deg_t});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BiPoly::add_term(std::size_t deg_s, std::size_t deg_t, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({deg_s, deg_t}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= scalar;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

IntPoly BiPoly::eval_s(const BigInt& value) const {
  IntPoly r;
  for (const auto& [e, c] : terms_) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), e.first);
    r += IntPoly::monomial(c * power, e.second);
  }
  return r;
}

BigRat BiPoly::eval(const BigRat& s, const BigRat& t) const {
  BigRat acc = 0;
  for (const auto& [e, c] : terms_) {
    BigRat term(c);
    for (std::size_t i = 0; i < e.first; ++i) term *= s;
    for (std::size_t j = 0; j < e.second; ++j) term *= t;
    acc += term;
  }
  acc.canonicalize();
  return acc;
}

BiPoly BiPoly::divide_exact(const BigInt& divisor) const {
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace(e, exact_divide(c, divisor));
  return BiPoly(std::move(out));
}

std::string BiPoly::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [e, c] : terms_) {
    os << (first ? "" : ",") << '(' << e.first << ',' << e.second << "):" << c;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace caylerian
