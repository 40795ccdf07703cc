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

#include "caylerian/identities.hpp"

#include <functional>
#include <sstream>

#include "caylerian/burge.hpp"
#include "caylerian/lomat.hpp"
#include "caylerian/series.hpp"

namespace caylerian {

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::Compositions: return "compositions";
    case CountMethod::Stirling: return "stirling";
    case CountMethod::InclExcl: return "inclexcl";
    case CountMethod::OgfCoefficient: return "ogf-coefficient";
    case CountMethod::Enumerate: return "enumerate";
    case CountMethod::DoubleSum: return "double-sum";
  }
  return "?";
}

CountMethod parse_count_method(const std::string& name) {
  for (auto m : {CountMethod::Compositions, CountMethod::Stirling, CountMethod::InclExcl, CountMethod::OgfCoefficient,
                 CountMethod::Enumerate, CountMethod::DoubleSum})
    if (to_string(m) == name) return m;
  throw std::invalid_argument("unknown count method '" + name + "'");
}

namespace {

BigInt signed_term(std::size_t n, std::size_t k, bool alternate, const BigInt& value) {
  return alternate && (n - k) % 2 == 1 ? BigInt(-value) : value;
}

BigInt power(const BigInt& base, std::size_t e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Per-part weight of the composition and inclusion-exclusion formulas.
BigInt part_weight(std::size_t m, std::size_t a, bool binary) { return binary ? binomial(m, a) : multichoose(m, a); }

BigInt genmat_compositions(std::size_t m, std::size_t n, bool binary) {
  BigInt total = 0;
  for (const auto& alpha : compositions(n)) {
    BigInt term = 1;
    for (std::size_t a : alpha) term *= part_weight(m, a, binary);
    total += term;
  }
  return total;
}

BigInt genmat_stirling(std::size_t m, std::size_t n, bool binary) {
  BigInt total = 0;
  for (std::size_t k = 0; k <= n; ++k)
    total += signed_term(n, k, binary, stirling1(n, k) * power(BigInt(static_cast<unsigned long>(m)), k) * fubini(k));
  return exact_divide(total, factorial(n));
}

BigInt genmat_inclexcl(std::size_t m, std::size_t n, bool binary) {
  BigInt total = 0;
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      BigInt term = binomial(k, i) * part_weight(m * (k - i), n, binary);
      total += i % 2 ? BigInt(-term) : term;
    }
  return total;
}

BigInt genmat_ogf(std::size_t m, std::size_t n, bool binary) {
  RatSeries s(0);
  if (binary) {
    // 1 / (2 - (1+x)^m)
    IntPoly denom = IntPoly::constant(2) - IntPoly::linear_power(1, m);
    s = RatSeries::from_rational(IntPoly{1}, denom, n);
  } else {
    // (1-x)^m / (2(1-x)^m - 1)
    IntPoly one_minus_x_m = IntPoly::linear_power(-1, m) * BigInt(m % 2 ? -1 : 1);
    s = RatSeries::from_rational(one_minus_x_m, one_minus_x_m * BigInt(2) - IntPoly{1}, n);
  }
  return to_integer(s[n]);
}

}  // namespace

BigInt count_genmat(std::size_t m, std::size_t n, bool binary, CountMethod method) {
  switch (method) {
    case CountMethod::Compositions: return genmat_compositions(m, n, binary);
    case CountMethod::Stirling: return genmat_stirling(m, n, binary);
    case CountMethod::InclExcl: return genmat_inclexcl(m, n, binary);
    case CountMethod::OgfCoefficient: return genmat_ogf(m, n, binary);
    case CountMethod::Enumerate: return static_cast<unsigned long>(enumerate_genmat(m, n, binary).size());
    case CountMethod::DoubleSum: break;
  }
  throw std::invalid_argument("count_genmat does not support method " + to_string(method));
}

BigInt count_mat(std::size_t n, bool binary, CountMethod method) {
  switch (method) {
    case CountMethod::Stirling: {
      BigInt total = 0;
      for (std::size_t k = 0; k <= n; ++k) total += signed_term(n, k, binary, fubini(k) * fubini(k) * stirling1(n, k));
      return exact_divide(total, factorial(n));
    }
    case CountMethod::Enumerate: return static_cast<unsigned long>(enumerate_mat(n, binary).size());
    case CountMethod::DoubleSum: return mat_double_sum(n, binary).rounded;
    default: break;
  }
  throw std::invalid_argument("count_mat does not support method " + to_string(method));
}

// --- certified sums -------------------------------------------------------------

namespace {

/// Upper bound on sum_{r > R} r^n / 2^{r+1}; nullopt while the term ratio is not below 1.
std::optional<BigRat> power_tail(std::size_t n, std::size_t R) {
  // ratio of consecutive terms from r = R+1 on is at most ((R+2)/(R+1))^n / 2
  BigRat rho = BigRat(power(BigInt(static_cast<unsigned long>(R + 2)), n), power(BigInt(static_cast<unsigned long>(R + 1)), n));
  rho.canonicalize();
  rho /= 2;
  if (rho >= 1) return std::nullopt;
  BigRat first(power(BigInt(static_cast<unsigned long>(R + 1)), n), power(BigInt(2), R + 2));
  first.canonicalize();
  return first / (1 - rho);
}

BigRat pow2_inverse(std::size_t e) {
  BigRat r(BigInt(1), power(BigInt(2), e));
  r.canonicalize();
  return r;
}

/// The unique integer in [lower, lower + width], if there is exactly one.
std::optional<BigInt> unique_integer(const BigRat& lower, const BigRat& width) {
  BigInt lo;
  mpz_cdiv_q(lo.get_mpz_t(), lower.get_num_mpz_t(), lower.get_den_mpz_t());
  const BigRat upper = lower + width;
  BigInt hi;
  mpz_fdiv_q(hi.get_mpz_t(), upper.get_num_mpz_t(), upper.get_den_mpz_t());
  if (lo == hi) return lo;
  return std::nullopt;
}

}  // namespace

CertifiedSum mat_double_sum(std::size_t n, bool binary, std::size_t max_index) {
  for (std::size_t R = 16; R <= max_index; R *= 2) {
    auto row_tail = power_tail(n, R);
    if (!row_tail) continue;
    // numerators over the common denominator 2^{2R+2}
    BigInt scaled = 0;
    BigRat f_head = 0;
    for (std::size_t r = 0; r <= R; ++r) {
      for (std::size_t s = 0; s <= R; ++s) {
        const BigInt q = binary ? binomial(r * s, n) : multichoose(r * s, n);
        if (q == 0) continue;
        scaled += q * power(BigInt(2), 2 * R - r - s);
      }
      f_head += BigRat(power(BigInt(static_cast<unsigned long>(r)), n)) * pow2_inverse(r + 1);
    }
    BigRat partial(scaled, power(BigInt(2), 2 * R + 2));
    partial.canonicalize();
    // outside the square: r > R or s > R; each part <= G(R) * F with F <= f_head + G(R)
    const BigRat tail = 2 * *row_tail * (f_head + *row_tail);
    if (tail >= BigRat(1, 2)) continue;
    if (auto v = unique_integer(partial, tail)) return {partial, tail, R, *v};
  }
  throw UnconvergedError("double sum for n=" + std::to_string(n) + " did not certify up to index " +
                         std::to_string(max_index));
}

CertifiedSum halving_sum(std::size_t n, bool binary, const BigRat& tail_bound, std::size_t max_index) {
  // |Genmat_m[n]| <= 2^{n-1} m^n for n >= 1, and the binary count is smaller
  const BigRat scale = n == 0 ? BigRat(1) : BigRat(power(BigInt(2), n - 1));
  BigRat partial = 0;
  for (std::size_t M = 0; M <= max_index; ++M) {
    partial += BigRat(count_genmat(M, n, binary, CountMethod::Compositions)) * pow2_inverse(M + 1);
    if (M < n + 1) continue;
    auto tail = power_tail(n, M);
    if (!tail) continue;
    const BigRat bound = scale * *tail;
    if (bound >= tail_bound) continue;
    if (auto v = unique_integer(partial, bound)) return {partial, bound, M, *v};
  }
  throw UnconvergedError("halving sum for n=" + std::to_string(n) + " did not certify up to index " +
                         std::to_string(max_index));
}

// --- polynomial formulas ------------------------------------------------------

IntPoly caylerian_formula(std::size_t n, bool strict) {
  IntPoly total;
  for (std::size_t k = 0; k <= n; ++k) {
    IntPoly inner;
    for (std::size_t i = 0; i <= k; ++i)
      inner += IntPoly::linear_power(-1, n - i) * (stirling2(k, i) * factorial(i));
    total += inner * signed_term(n, k, strict, stirling1(n, k) * fubini(k));
  }
  return total.divide_exact(factorial(n));
}

BiPoly two_sided_formula(std::size_t n, bool strict) {
  BiPoly total;
  for (std::size_t k = 0; k <= n; ++k) {
    const IntPoly bal = ballot_block_poly(k);
    total += BiPoly::outer(bal, bal) * signed_term(n, k, strict, stirling1(n, k));
  }
  return total.divide_exact(factorial(n));
}

IntPoly two_sided_to_caylerian(const BiPoly& p, std::size_t n) {
  IntPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e.second > n) throw std::domain_error("column degree exceeds n in two_sided_to_caylerian");
    out += IntPoly::linear_power(-1, n - e.second) * c;
  }
  return out;
}

BigInt beta_formula(const AscentSetSpec& spec, bool strict) {
  const std::size_t n = spec.n();
  const auto delta = spec.delta();
  BigInt total = 0;
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      BigInt term = binomial(k, i);
      for (std::size_t d : delta) term *= strict ? multichoose(k - i, d) : binomial(k - i, d);
      total += i % 2 ? BigInt(-term) : term;
    }
  return total;
}

BigInt lambda_inclexcl(const AscentSetSpec& spec, bool strict) {
  const auto& s = spec.set();
  BigInt total = 0;
  for (unsigned long mask = 0; mask < (1UL << s.size()); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (mask >> i & 1) subset.push_back(s[i]);
    const BigInt term = beta_formula(AscentSetSpec(spec.n(), subset), strict);
    total += (s.size() - subset.size()) % 2 ? BigInt(-term) : term;
  }
  return total;
}

std::vector<BigInt> carlitz_series(std::size_t n, bool strict, std::size_t max_power) {
  const IntPoly p = caylerian_formula(n, strict);
  std::vector<BigInt> out;
  for (std::size_t m = 1; m <= max_power; ++m) {
    BigInt c = 0;
    for (std::size_t j = 0; j + 1 <= m; ++j) c += p.coefficient(j) * multichoose(n + 1, m - 1 - j);
    out.push_back(c);
  }
  return out;
}

// --- reports ------------------------------------------------------------------

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Unconverged: return "unconverged";
  }
  return "?";
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status != CheckStatus::Pass) return false;
  return true;
}

bool VerificationReport::any_unconverged() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Unconverged) return true;
  return false;
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

void CheckRecorder::fail(const std::string& cell, const std::string& expected, const std::string& actual) {
  if (result_.status == CheckStatus::Pass) {
    result_.status = CheckStatus::Fail;
    result_.witness = Witness{cell, expected, actual};
  }
}

void CheckRecorder::unconverged(const std::string& detail) {
  result_.status = CheckStatus::Unconverged;
  result_.detail = detail;
}

std::string describe(const BigInt& v) { return v.get_str(); }
std::string describe(const IntPoly& p) { return p.to_string(); }
std::string describe(const BiPoly& p) { return p.to_string(); }
std::string describe(const std::vector<BigInt>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + "]";
}
std::string describe(const BigRat& v) { return v.get_str(); }
std::string describe(const std::vector<BigRat>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + "]";
}

std::string to_string(Pairing p) {
  switch (p) {
    case Pairing::AsPrinted: return "as-printed (weak<->general, strict<->binary)";
    case Pairing::Swapped: return "swapped (weak<->binary, strict<->general)";
    case Pairing::Both: return "undetermined (both pairings fit)";
    case Pairing::Contradiction: return "contradiction";
  }
  return "?";
}

PairingReport pairing_check(std::size_t n_max, std::size_t m_max) {
  PairingReport report;
  bool all_printed = true, all_swapped = true;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto weak = carlitz_series(n, false, m_max);
    const auto strict = carlitz_series(n, true, m_max);
    for (std::size_t m = 1; m <= m_max; ++m) {
      PairingCell cell{n, m, weak[m - 1], strict[m - 1], count_genmat(m, n, false, CountMethod::Compositions),
                       count_genmat(m, n, true, CountMethod::Compositions), false, false};
      cell.as_printed_holds = cell.weak_coefficient == cell.general_count && cell.strict_coefficient == cell.binary_count;
      cell.swapped_holds = cell.weak_coefficient == cell.binary_count && cell.strict_coefficient == cell.general_count;
      all_printed = all_printed && cell.as_printed_holds;
      all_swapped = all_swapped && cell.swapped_holds;
      if (!cell.as_printed_holds && !cell.swapped_holds && !report.contradiction) report.contradiction = cell;
      report.cells.push_back(std::move(cell));
    }
  }
  if (all_printed && all_swapped)
    report.conclusion = Pairing::Both;
  else if (all_printed)
    report.conclusion = Pairing::AsPrinted;
  else if (all_swapped)
    report.conclusion = Pairing::Swapped;
  else {
    report.conclusion = Pairing::Contradiction;
    if (!report.contradiction)
      for (const auto& c : report.cells)
        if (!c.swapped_holds) {
          report.contradiction = c;
          break;
        }
  }
  return report;
}

CheckResult PairingReport::as_check() const {
  CheckRecorder rec("pairing", "cells=" + std::to_string(cells.size()));
  std::size_t printed_failures = 0;
  for (const auto& c : cells) printed_failures += !c.as_printed_holds;
  std::ostringstream os;
  os << "pairing " << to_string(conclusion) << "; as-printed fails at " << printed_failures << " of " << cells.size()
     << " cells";
  rec.note(os.str());
  // a grid too small to separate the pairings is undetermined, not a failure
  if (conclusion == Pairing::Contradiction && contradiction) {
    const auto& w = *contradiction;
    rec.fail("n=" + std::to_string(w.n) + " m=" + std::to_string(w.m),
             "series {" + w.weak_coefficient.get_str() + "," + w.strict_coefficient.get_str() + "}",
             "counts {" + w.general_count.get_str() + "," + w.binary_count.get_str() + "}");
  }
  return rec.finish();
}

VerificationReport halving_gf_check(std::size_t n_max, const BigRat& tail_bound) {
  VerificationReport report;
  for (bool binary : {false, true}) {
    CheckRecorder rec(binary ? "halving-gf BMat" : "halving-gf Mat",
                      "n<=" + std::to_string(n_max) + " tail<" + tail_bound.get_str());
    try {
      for (std::size_t n = 0; n <= n_max; ++n) {
        const auto sum = halving_sum(n, binary, tail_bound);
        rec.expect_equal("n=" + std::to_string(n), count_mat(n, binary, CountMethod::Stirling), sum.rounded);
      }
    } catch (const UnconvergedError& e) {
      rec.unconverged(e.what());
    }
    report.checks.push_back(rec.finish());
  }
  return report;
}

namespace {

/// -log(1 - x)
RatSeries connected_linear_orders(std::size_t order) {
  RatSeries minus_x = RatSeries::x(order) * BigRat(-1);
  return RatSeries::log_one_plus_x(order).compose(minus_x) * BigRat(-1);
}

/// 1 / (2 - e^{c x})
RatSeries ballot_egf(std::size_t order, const BigRat& c) {
  return (RatSeries::constant(order, 2) - RatSeries::exp_linear(order, c)).invert_unit();
}

/// sum_k a_k^2 x^k / k! for a_k = k! [x^k] Bal(x)
RatSeries ballot_pair_egf(std::size_t order) {
  const RatSeries bal = ballot_egf(order, 1);
  RatSeries out(order);
  std::vector<BigRat> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    const BigRat count = bal[k] * BigRat(factorial(k));
    c[k] = count * count / BigRat(factorial(k));
  }
  return RatSeries(order, std::move(c));
}

void compare_counts(CheckRecorder& rec, const RatSeries& egf, std::size_t n_max,
                    const std::function<BigInt(std::size_t)>& count) {
  for (std::size_t n = 0; n <= n_max; ++n) {
    const BigRat c = egf[n];
    if (c.get_den() != 1) {
      rec.fail("n=" + std::to_string(n), "integer", c.get_str());
      return;
    }
    if (!rec.expect_equal("n=" + std::to_string(n), count(n), c.get_num())) return;
  }
}

}  // namespace

VerificationReport species_table_check(std::size_t n_max, std::size_t m_max) {
  VerificationReport report;
  const std::size_t N = n_max;
  const std::string range = "n<=" + std::to_string(n_max);
  const RatSeries lc = connected_linear_orders(N);
  const RatSeries lc_signed = RatSeries::log_one_plus_x(N);
  const RatSeries linear = RatSeries::from_rational(IntPoly{1}, IntPoly{1, -1}, N);

  for (std::size_t m = 0; m <= m_max; ++m) {
    const std::string params = range + " m=" + std::to_string(m);
    auto general = [m](std::size_t n) { return count_genmat(m, n, false, CountMethod::Compositions); };
    auto binary = [m](std::size_t n) { return count_genmat(m, n, true, CountMethod::Compositions); };
    {
      CheckRecorder rec("Sym x Genmat_m = L o (L^m - 1)", params);
      const RatSeries lm = RatSeries::from_poly(N, IntPoly::linear_power(-1, m) * BigInt(m % 2 ? -1 : 1)).invert_unit();
      compare_counts(rec, linear.compose(lm - RatSeries::constant(N, 1)), n_max, general);
      report.checks.push_back(rec.finish());
    }
    {
      CheckRecorder rec("Sym x Genmat01_m = L o ((1+X)^m - 1)", params);
      const RatSeries inner = RatSeries::from_poly(N, IntPoly::linear_power(1, m) - IntPoly{1});
      compare_counts(rec, linear.compose(inner), n_max, binary);
      report.checks.push_back(rec.finish());
    }
    const RatSeries bal_m = ballot_egf(N, BigRat(static_cast<long>(m)));
    {
      CheckRecorder rec("Sym x Genmat_m = (Bal x E(mX)) o L^c", params);
      compare_counts(rec, bal_m.compose(lc), n_max, general);
      report.checks.push_back(rec.finish());
    }
    {
      CheckRecorder rec("Sym x Genmat01_m = (Bal x E(mX)) o L^c_(-1)", params);
      compare_counts(rec, bal_m.compose(lc_signed), n_max, binary);
      report.checks.push_back(rec.finish());
    }
  }

  const RatSeries pair = ballot_pair_egf(N);
  auto mat_count = [](bool binary) {
    return [binary](std::size_t n) {
      return count_mat(n, binary, n <= 6 ? CountMethod::Enumerate : CountMethod::Stirling);
    };
  };
  {
    CheckRecorder rec("Sym x Mat = (Bal x Bal) o L^c", range);
    compare_counts(rec, pair.compose(lc), n_max, mat_count(false));
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("Sym x BMat = (Bal x Bal) o L^c_(-1)", range);
    compare_counts(rec, pair.compose(lc_signed), n_max, mat_count(true));
    report.checks.push_back(rec.finish());
  }

  // weighted: n! B_n(s,t) = sum_k (n! [x^n] (L^c)^k / k!) |Bal^s[k]| |Bal^t[k]|
  const std::size_t n_weighted = std::min<std::size_t>(n_max, 5);
  for (bool strict : {false, true}) {
    CheckRecorder rec(strict ? "Sym x BMat^{s,t} = (Bal^s x Bal^t) o L^c_(-1)" : "Sym x Mat^{s,t} = (Bal^s x Bal^t) o L^c",
                      "n<=" + std::to_string(n_weighted));
    const RatSeries& inner = strict ? lc_signed : lc;
    for (std::size_t n = 0; n <= n_weighted; ++n) {
      BiPoly lhs;
      RatSeries inner_power = RatSeries::constant(N, 1);
      for (std::size_t k = 0; k <= n; ++k) {
        const BigInt weight = to_integer(inner_power[n] * BigRat(factorial(n)) / BigRat(factorial(k)));
        const IntPoly bal = ballot_block_poly(k);
        lhs += BiPoly::outer(bal, bal) * weight;
        inner_power = inner_power * inner;
      }
      if (!rec.expect_equal("n=" + std::to_string(n), two_sided_brute(n, strict) * factorial(n), lhs)) break;
    }
    report.checks.push_back(rec.finish());
  }

  {
    CheckRecorder rec("Bal(x) = 1/(2 - e^x)", range);
    compare_counts(rec, ballot_egf(N, 1).egf_to_ogf(), n_max, [](std::size_t n) { return fubini(n); });
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("L^c_(-1)(x) = log(1+x)", range);
    compare_counts(rec, lc_signed.egf_to_ogf(), n_max, [](std::size_t n) {
      if (n == 0) return BigInt(0);
      const BigInt f = factorial(n - 1);
      return (n - 1) % 2 ? BigInt(-f) : f;
    });
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("Bal^t(x) = 1/(1 - t(e^x - 1))", range + " t=0.." + std::to_string(n_max + 1));
    for (std::size_t t = 0; t <= n_max + 1; ++t) {
      const BigRat tt(static_cast<long>(t));
      const RatSeries e_minus_1 = RatSeries::exp_linear(N, 1) - RatSeries::constant(N, 1);
      const RatSeries bal_t = (RatSeries::constant(N, 1) - e_minus_1 * tt).invert_unit().egf_to_ogf();
      bool ok = true;
      for (std::size_t n = 0; n <= n_max && ok; ++n)
        ok = rec.expect_equal("n=" + std::to_string(n) + " t=" + std::to_string(t), ballot_block_poly(n).eval_at(tt),
                              bal_t[n]);
      if (!ok) break;
    }
    report.checks.push_back(rec.finish());
  }

  // structural: L o (L^m)_+ built directly has n! |Genmat_m[n]| elements
  const std::size_t n_struct = std::min<std::size_t>(n_max, 5);
  const std::size_t m_struct = std::min<std::size_t>(m_max, 3);
  {
    CheckRecorder rec("|L o (L^m)_+ [n]| = n! |Genmat_m[n]|",
                      "n<=" + std::to_string(n_struct) + " m<=" + std::to_string(m_struct));
    for (std::size_t m = 0; m <= m_struct; ++m)
      for (std::size_t n = 0; n <= n_struct; ++n) {
        unsigned long direct = 0;
        for_each_lomat(m, n, [&](const LinOrderMatrix&) { ++direct; });
        rec.expect_equal("n=" + std::to_string(n) + " m=" + std::to_string(m),
                         BigInt(factorial(n) * count_genmat(m, n, false, CountMethod::Enumerate)), BigInt(direct));
      }
    report.checks.push_back(rec.finish());
  }
  return report;
}

}  // namespace caylerian
