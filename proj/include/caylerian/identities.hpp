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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "caylerian/numbers.hpp"
#include "caylerian/poly.hpp"
#include "caylerian/words.hpp"

namespace caylerian {

enum class CountMethod { Compositions, Stirling, InclExcl, OgfCoefficient, Enumerate, DoubleSum };

std::string to_string(CountMethod m);
/// Accepts the names produced by to_string; throws std::invalid_argument otherwise.
CountMethod parse_count_method(const std::string& name);

/// A truncated numeric sum whose tail could not be certified.
class UnconvergedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |Genmat_m[n]| (or the binary variant) by the chosen method.
/// DoubleSum is not a valid method here (std::invalid_argument).
BigInt count_genmat(std::size_t m, std::size_t n, bool binary, CountMethod method);

/// |Mat[n]| or |BMat[n]| by Stirling, Enumerate or DoubleSum.
/// DoubleSum may throw UnconvergedError; other methods throw std::invalid_argument.
BigInt count_mat(std::size_t n, bool binary, CountMethod method);

/// Result of a certified truncated sum: lower <= true value <= lower + tail.
struct CertifiedSum {
  BigRat partial;
  BigRat tail_bound;
  std::size_t terms;  // truncation index reached
  BigInt rounded;
};

/// sum_{r,s>=0} 2^{-(r+s+2)} binom(rs, n) (binary) or multichoose(rs, n) (general).
/// Throws UnconvergedError if no truncation up to `max_index` certifies an integer.
CertifiedSum mat_double_sum(std::size_t n, bool binary, std::size_t max_index = 4096);

/// sum_{m>=0} 2^{-(m+1)} |Genmat_m[n]| (or binary), with a certified tail below tail_bound.
CertifiedSum halving_sum(std::size_t n, bool binary, const BigRat& tail_bound, std::size_t max_index = 4096);

/// C_n(t) (or C°_n(t)) from the Stirling/Fubini expansion in (t-1).
IntPoly caylerian_formula(std::size_t n, bool strict);

/// Two-sided polynomial in (s, t) from the ballot block polynomials.
BiPoly two_sided_formula(std::size_t n, bool strict);

/// (t-1)^n p(1, 1/(t-1)) as a polynomial: the bridge from two-sided to one-sided polynomials.
IntPoly two_sided_to_caylerian(const BiPoly& p, std::size_t n);

/// Inclusion-exclusion count of Cayley words whose ascent set (strict: strict
/// ascent set) is contained in S.
BigInt beta_formula(const AscentSetSpec& spec, bool strict);

/// Words with ascent set exactly S by inclusion-exclusion over subsets of S.
BigInt lambda_inclexcl(const AscentSetSpec& spec, bool strict);

/// Coefficients of t^1..t^max_power in t P_n(t) / (1 - t)^{n+1}, P = C_n or C°_n.
std::vector<BigInt> carlitz_series(std::size_t n, bool strict, std::size_t max_power);

// --- verification -----------------------------------------------------------

enum class CheckStatus { Pass, Fail, Unconverged };
std::string to_string(CheckStatus s);

struct Witness {
  std::string params;
  std::string expected;
  std::string actual;
};

struct CheckResult {
  std::string name;
  std::string params;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::optional<Witness> witness;
};

/// Ordered list of checks; deterministic for fixed parameters.
struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  bool any_unconverged() const;
  void merge(const VerificationReport& other);
};

/// Records a comparison over a parameter grid; the first mismatch becomes the witness.
class CheckRecorder {
 public:
  CheckRecorder(std::string name, std::string params) {
    result_.name = std::move(name);
    result_.params = std::move(params);
  }

  template <typename T>
  bool expect_equal(const std::string& cell, const T& expected, const T& actual);
  void fail(const std::string& cell, const std::string& expected, const std::string& actual);
  void unconverged(const std::string& detail);
  void note(const std::string& detail) { result_.detail = detail; }
  CheckResult finish() const { return result_; }

 private:
  CheckResult result_;
};

std::string describe(const BigInt& v);
std::string describe(const IntPoly& p);
std::string describe(const BiPoly& p);
std::string describe(const std::vector<BigInt>& v);
std::string describe(const BigRat& v);
std::string describe(const std::vector<BigRat>& v);
inline std::string describe(const std::string& s) { return s; }

template <typename T>
bool CheckRecorder::expect_equal(const std::string& cell, const T& expected, const T& actual) {
  if (expected == actual) return true;
  fail(cell, describe(expected), describe(actual));
  return false;
}

enum class Pairing { AsPrinted, Swapped, Both, Contradiction };
std::string to_string(Pairing p);

struct PairingCell {
  std::size_t n;
  std::size_t m;
  BigInt weak_coefficient;
  BigInt strict_coefficient;
  BigInt general_count;
  BigInt binary_count;
  bool as_printed_holds;  // weak <-> general, strict <-> binary
  bool swapped_holds;     // weak <-> binary, strict <-> general
};

struct PairingReport {
  std::vector<PairingCell> cells;
  Pairing conclusion;
  std::optional<PairingCell> contradiction;
  CheckResult as_check() const;
};

/// Compares the t-series of t C_n(t)/(1-t)^{n+1} and t C°_n(t)/(1-t)^{n+1}
/// with the Genmat counts over 0 <= n <= n_max, 1 <= m <= m_max.
PairingReport pairing_check(std::size_t n_max, std::size_t m_max);

/// Halving generating-function sums against |Mat[n]| and |BMat[n]|.
VerificationReport halving_gf_check(std::size_t n_max, const BigRat& tail_bound);

/// Species equations checked through order n_max with the series engine,
/// plus structural cardinalities for n <= min(5, n_max).
VerificationReport species_table_check(std::size_t n_max, std::size_t m_max);

}  // namespace caylerian
