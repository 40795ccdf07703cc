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

#include "caylerian/verify.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "caylerian/burge.hpp"
#include "caylerian/lomat.hpp"
#include "caylerian/series.hpp"

namespace caylerian {

namespace {

std::string cell(std::size_t n) { return "n=" + std::to_string(n); }
std::string cell(std::size_t n, std::size_t m) { return "n=" + std::to_string(n) + " m=" + std::to_string(m); }
std::string upto(const char* var, std::size_t v) { return std::string(var) + "<=" + std::to_string(v); }

BigInt count_of(std::size_t c) { return static_cast<unsigned long>(c); }

LinOrderMatrix example_genmat() {
  return LinOrderMatrix::from_rows({{{}, {5}, {6, 7}}, {{1, 2, 3}, {}, {}}, {{}, {}, {}}, {{4}, {}, {8, 9}}});
}

LinOrderMatrix example_lomat() {
  return LinOrderMatrix::from_rows({{{}, {5}, {2, 3}}, {{7, 8, 4}, {}, {}}, {{}, {}, {}}, {{6}, {}, {9, 1}}});
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"kernel", "bijections", "involutions", "formulas", "pairing", "gf"};
  return names;
}

// --- kernel ----------------------------------------------------------------------

VerificationReport verify_kernel(const SuiteBounds& b) {
  VerificationReport report;
  const std::size_t N = b.formula_n;
  {
    CheckRecorder rec("number-table recurrences", upto("n,k", N));
    for (std::size_t n = 1; n <= N; ++n)
      for (std::size_t k = 1; k <= n; ++k) {
        const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        rec.expect_equal(at + " pascal", BigInt(binomial(n - 1, k - 1) + binomial(n - 1, k)), binomial(n, k));
        rec.expect_equal(at + " stirling1", BigInt(stirling1(n - 1, k - 1) + (n - 1) * stirling1(n - 1, k)),
                         stirling1(n, k));
        rec.expect_equal(at + " stirling2", BigInt(stirling2(n - 1, k - 1) + k * stirling2(n - 1, k)), stirling2(n, k));
      }
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("fubini = sum S(n,k) k! = Bal^t[n] at t=1", upto("n", N));
    for (std::size_t n = 0; n <= N; ++n) {
      BigInt sum = 0;
      for (std::size_t k = 0; k <= n; ++k) sum += stirling2(n, k) * factorial(k);
      rec.expect_equal(cell(n), sum, fubini(n));
      rec.expect_equal(cell(n) + " poly", BigRat(fubini(n)), ballot_block_poly(n).eval_at(1));
    }
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("multichoose(m,n) = binomial(m+n-1,n)", upto("m,n", N));
    for (std::size_t m = 1; m <= N; ++m)
      for (std::size_t n = 0; n <= N; ++n) rec.expect_equal(cell(n, m), binomial(m + n - 1, n), multichoose(m, n));
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("series round trips", upto("order", N));
    const RatSeries bal = (RatSeries::constant(N, 2) - RatSeries::exp_linear(N, 1)).invert_unit();
    rec.expect_equal("egf/ogf", bal.coefficients(), bal.egf_to_ogf().ogf_to_egf().coefficients());
    for (std::size_t m = 0; m <= b.formula_m; ++m) {
      const IntPoly p = IntPoly::linear_power(-1, m);
      const IntPoly q = p * BigInt(2) - IntPoly::constant(m % 2 ? -1 : 1);
      const RatSeries f = RatSeries::from_rational(p, q, N);
      rec.expect_equal("from_rational m=" + std::to_string(m), RatSeries::from_poly(N, p).coefficients(),
                       (f * RatSeries::from_poly(N, q)).coefficients());
    }
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("|Cay[n]| = |Bal[n]| = fubini(n)", upto("n", b.enum_n));
    for (std::size_t n = 0; n <= b.enum_n; ++n) {
      rec.expect_equal(cell(n) + " cayley", fubini(n), count_of(enumerate_cayley(n).size()));
      rec.expect_equal(cell(n) + " ballots", fubini(n), count_of(enumerate_ballots(n).size()));
    }
    report.checks.push_back(rec.finish());
  }
  return report;
}

// --- bijections ----------------------------------------------------------------

VerificationReport verify_bijections(const SuiteBounds& b) {
  VerificationReport report;
  {
    CheckRecorder rec("ballot <-> Cayley word", upto("n", b.enum_n));
    for (std::size_t n = 0; n <= b.enum_n; ++n) {
      std::set<CayleyWord> images;
      for (const auto& ballot : enumerate_ballots(n)) {
        const CayleyWord w = ballot_to_cayley(ballot);
        images.insert(w);
        if (!(cayley_to_ballot(w) == ballot)) rec.fail(cell(n), ballot.to_string(), cayley_to_ballot(w).to_string());
      }
      rec.expect_equal(cell(n) + " image size", fubini(n), count_of(images.size()));
    }
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("reverse/complement symmetries", upto("n", b.enum_n));
    for (std::size_t n = 0; n <= b.enum_n; ++n)
      for (const auto& w : enumerate_cayley(n)) {
        const auto& l = w.letters();
        if (!(reverse(reverse(w)) == w) || !(complement(complement(w)) == w))
          rec.fail(cell(n), w.to_string(), "not an involution");
        const std::size_t des_strict = stat_count(l, StatKind::StrictDescent);
        const std::size_t asc = stat_count(l, StatKind::WeakAscent);
        if (n > 0 && des_strict != n - 1 - asc) rec.fail(cell(n) + " " + w.to_string(), "des° = n-1-asc", "differs");
        const unsigned long weak = stat_mask(l, StatKind::WeakDescent);
        const unsigned long strict = stat_mask(l, StatKind::StrictDescent);
        unsigned long plateaus = 0;
        for (std::size_t i = 0; i + 1 < n; ++i)
          if (l[i] == l[i + 1]) plateaus |= 1UL << i;
        if ((strict & ~weak) || strict != (weak & ~plateaus)) rec.fail(cell(n) + " " + w.to_string(), "Des° = Des \\ plateaus", "differs");
        if (stat_mask(l, StatKind::StrictAscent) & ~stat_mask(l, StatKind::WeakAscent))
          rec.fail(cell(n) + " " + w.to_string(), "Asc° in Asc", "differs");
        // reverse swaps descents and ascents
        if (stat_count(reverse(w).letters(), StatKind::WeakAscent) != stat_count(l, StatKind::WeakDescent))
          rec.fail(cell(n) + " " + w.to_string(), "asc(w^r) = des(w)", "differs");
      }
    report.checks.push_back(rec.finish());
  }
  for (bool binary : {false, true}) {
    CheckRecorder rec(binary ? "binary Burge word <-> matrix" : "Burge word <-> matrix", upto("n", b.enum_n));
    for (std::size_t n = 0; n <= b.enum_n; ++n) {
      std::set<BurgeMatrix> images;
      for (const auto& bw : enumerate_burge(n, binary)) {
        const BurgeMatrix a = word_to_matrix(bw);
        if (!(matrix_to_word(a) == bw)) rec.fail(cell(n), bw.to_string(), matrix_to_word(a).to_string());
        if (binary != a.is_binary() && binary) rec.fail(cell(n), "binary matrix", a.to_string());
        if (a.is_binary() && !matrix_to_word(a).is_binary()) rec.fail(cell(n), "binary word", bw.to_string());
        images.insert(a);
      }
      rec.expect_equal(cell(n) + " injective", count_of(enumerate_burge(n, binary).size()), count_of(images.size()));
    }
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("worked example: action, atoms, atom ballot", "n=9 m=4");
    const LinearOrderWord w(Word{7, 8, 4, 6, 5, 2, 3, 9, 1});
    const LinOrderMatrix m = act(w, example_genmat());
    rec.expect_equal("act", example_lomat().to_string(), m.to_string());
    rec.expect_equal("prod", w.to_string(), prod(m).to_string());
    rec.expect_equal("inverse", std::string("967354128"), w.inverse().to_string());
    std::string atom_list;
    for (const auto& a : atoms(m)) atom_list += render_word(a) + " ";
    rec.expect_equal("atoms", std::string("78 4 6 5 23 9 1 "), atom_list);
    rec.expect_equal("ballot", std::string("{78_2,4_2,6_4}{5_1}{23_1,9_4,1_4}"),
                     to_atom_ballot(m, RowMode::Color).to_string());
    rec.expect_equal("tau", std::string("[. 5 23 / 874 . . / . . . / 6 . 91]"), tau(m).to_string());
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("act / unact and L o (L^m)_+ = Sym x Genmat_m", upto("n", b.enum_n) + " " + upto("m", b.enum_m));
    for (std::size_t m = 0; m <= b.enum_m; ++m)
      for (std::size_t n = 0; n <= b.enum_n; ++n) {
        std::set<LinOrderMatrix> direct;
        for_each_lomat(m, n, [&](const LinOrderMatrix& x) { direct.insert(x); });
        const auto genmat = enumerate_genmat(m, n, false);
        std::set<LinOrderMatrix> images;
        for_each_linear_order(n, [&](const Word& letters) {
          const LinearOrderWord w(letters);
          for (const auto& a : genmat) {
            const LinOrderMatrix x = act(w, a);
            const auto [w2, a2] = unact(x);
            if (!(w2 == w) || !(a2 == a)) rec.fail(cell(n, m), a.to_string(), a2.to_string());
            if (!direct.count(x)) rec.fail(cell(n, m), "image in L o (L^m)_+", x.to_string());
            images.insert(x);
          }
        });
        rec.expect_equal(cell(n, m) + " bijective", count_of(direct.size()), count_of(images.size()));
        rec.expect_equal(cell(n, m) + " cardinality", BigInt(factorial(n) * count_of(genmat.size())),
                         count_of(direct.size()));
      }
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("atom ballot round trips", upto("n", b.enum_n) + " " + upto("m", b.enum_m));
    for (std::size_t m = 0; m <= b.enum_m; ++m)
      for (std::size_t n = 0; n <= b.enum_n; ++n) {
        std::set<std::string> seen;
        unsigned long total = 0;
        for_each_lomat(m, n, [&](const LinOrderMatrix& x) {
          ++total;
          const AtomBallot color = to_atom_ballot(x, RowMode::Color);
          seen.insert(color.to_string());
          if (!(from_atom_ballot(color, m) == x)) rec.fail(cell(n, m) + " color", x.to_string(), color.to_string());
          if (!x.has_empty_row()) {
            const AtomBallot rows = to_atom_ballot(x, RowMode::Ballot);
            if (!(from_atom_ballot(rows, m) == x)) rec.fail(cell(n, m) + " ballot", x.to_string(), rows.to_string());
          }
        });
        rec.expect_equal(cell(n, m) + " injective", count_of(total), count_of(seen.size()));
      }
    report.checks.push_back(rec.finish());
  }
  return report;
}

// --- involutions ---------------------------------------------------------------

VerificationReport verify_involutions(const SuiteBounds& b) {
  VerificationReport report;
  const std::string range = upto("n", b.enum_n) + " " + upto("m", b.enum_m);
  {
    CheckRecorder rec("gamma: sign-reversing involution, Fix = Genmat_m", range);
    for (std::size_t m = 0; m <= b.enum_m; ++m)
      for (std::size_t n = 0; n <= b.enum_n; ++n) {
        BigInt signed_sum = 0;
        unsigned long fixed = 0;
        for (const auto& a : enumerate_signed(m, n)) {
          const SignedLOMatrix g = gamma(a);
          if (!(gamma(g) == a)) rec.fail(cell(n, m), a.to_string(), "gamma not an involution");
          const bool is_fixed = g == a;
          if (is_fixed != (leftmost_empty_column(a) == 0)) rec.fail(cell(n, m), "Fix = no empty column", a.to_string());
          if (!is_fixed && xi_columns(g) != -xi_columns(a)) rec.fail(cell(n, m), "sign reversed", a.to_string());
          fixed += is_fixed;
          signed_sum += xi_columns(a);
        }
        const BigInt target = count_genmat(m, n, false, CountMethod::Compositions);
        rec.expect_equal(cell(n, m) + " fixed points", target, count_of(fixed));
        rec.expect_equal(cell(n, m) + " signed sum", target, signed_sum);
      }
    report.checks.push_back(rec.finish());
  }
  for (bool binary : {false, true}) {
    CheckRecorder rec(binary ? "gamma signed sum over Delta(S) = |BMat(S)[n]|" : "gamma signed sum over Delta(S) = |Mat(S)[n]|",
                      upto("n", b.enum_n));
    for (std::size_t n = 1; n <= b.enum_n; ++n)
      for (const auto& spec : AscentSetSpec::all(n)) {
        BigInt signed_sum = 0;
        for (const auto& a : enumerate_signed(spec.delta().size(), n, spec, binary)) signed_sum += xi_columns(a);
        rec.expect_equal(spec.to_string(), count_of(enumerate_mat(n, binary, spec).size()), signed_sum);
      }
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("tau: sign-reversing involution, Fix = binary", range);
    for (std::size_t m = 0; m <= b.enum_m; ++m)
      for (std::size_t n = 0; n <= b.enum_n; ++n) {
        BigInt signed_sum = 0;
        for_each_lomat(m, n, [&](const LinOrderMatrix& x) {
          const LinOrderMatrix t = tau(x);
          if (!(tau(t) == x)) rec.fail(cell(n, m), x.to_string(), "tau not an involution");
          const bool is_fixed = t == x;
          if (is_fixed != x.is_binary()) rec.fail(cell(n, m), "Fix = binary", x.to_string());
          if (!is_fixed) {
            if (xi_atoms(t) != -xi_atoms(x)) rec.fail(cell(n, m), "sign reversed", x.to_string());
            const long d = static_cast<long>(atoms(t).size()) - static_cast<long>(atoms(x).size());
            if (d != 1 && d != -1) rec.fail(cell(n, m), "atom count changes by 1", x.to_string());
          }
          signed_sum += xi_atoms(x);
        });
        rec.expect_equal(cell(n, m), BigInt(factorial(n) * count_genmat(m, n, true, CountMethod::Compositions)),
                         signed_sum);
      }
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("tau signed sum without empty rows = n! |BMat[n]|", upto("n", b.enum_n));
    for (std::size_t n = 0; n <= b.enum_n; ++n) {
      BigInt signed_sum = 0;
      for (std::size_t m = (n == 0 ? 0 : 1); m <= n; ++m)
        for_each_lomat(m, n, [&](const LinOrderMatrix& x) {
          if (!x.has_empty_row()) signed_sum += xi_atoms(x);
        });
      rec.expect_equal(cell(n), BigInt(factorial(n) * count_of(enumerate_mat(n, true).size())), signed_sum);
    }
    report.checks.push_back(rec.finish());
  }
  return report;
}

// --- formulas ----------------------------------------------------------------------

VerificationReport verify_formulas(const SuiteBounds& b) {
  VerificationReport report;
  for (bool binary : {false, true}) {
    CheckRecorder rec(binary ? "count_genmat01 method agreement" : "count_genmat method agreement",
                      upto("n", b.formula_n) + " " + upto("m", b.formula_m) + "; enumeration " + upto("n", b.enum_n) +
                          " " + upto("m", b.enum_m));
    for (std::size_t m = 0; m <= b.formula_m; ++m)
      for (std::size_t n = 0; n <= b.formula_n; ++n) {
        const BigInt reference = count_genmat(m, n, binary, CountMethod::Compositions);
        for (auto method : {CountMethod::Stirling, CountMethod::InclExcl, CountMethod::OgfCoefficient})
          rec.expect_equal(cell(n, m) + " " + to_string(method), reference, count_genmat(m, n, binary, method));
        if (m <= b.enum_m && n <= b.enum_n)
          rec.expect_equal(cell(n, m) + " enumerate", reference, count_genmat(m, n, binary, CountMethod::Enumerate));
      }
    report.checks.push_back(rec.finish());
  }
  for (bool binary : {false, true}) {
    CheckRecorder rec(binary ? "|BMat[n]| stirling = enumeration" : "|Mat[n]| stirling = enumeration", upto("n", b.enum_n));
    for (std::size_t n = 0; n <= b.enum_n; ++n)
      rec.expect_equal(cell(n), count_mat(n, binary, CountMethod::Enumerate), count_mat(n, binary, CountMethod::Stirling));
    report.checks.push_back(rec.finish());
  }
  for (bool strict : {false, true}) {
    CheckRecorder rec(strict ? "strict Caylerian formula = brute force" : "Caylerian formula = brute force", upto("n", b.enum_n));
    for (std::size_t n = 0; n <= b.enum_n; ++n) {
      const IntPoly formula = caylerian_formula(n, strict);
      rec.expect_equal(cell(n), caylerian_brute(n, strict), formula);
      if (strict && n >= 1) rec.expect_equal(cell(n) + " reverse", caylerian_formula(n, false).reverse_coefficients(n - 1), formula);
    }
    report.checks.push_back(rec.finish());
  }
  for (bool strict : {false, true}) {
    CheckRecorder rec(strict ? "strict two-sided formula = brute force" : "two-sided formula = brute force", upto("n", b.enum_n));
    for (std::size_t n = 0; n <= b.enum_n; ++n) {
      const BiPoly formula = two_sided_formula(n, strict);
      rec.expect_equal(cell(n), two_sided_brute(n, strict), formula);
      rec.expect_equal(cell(n) + " (t-1)^n B(1,1/(t-1))", caylerian_formula(n, strict), two_sided_to_caylerian(formula, n));
    }
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("C_n(2) = |Mat[n]|, C°_n(2) = |BMat[n]|", upto("n", b.enum_n));
    for (std::size_t n = 0; n <= b.enum_n; ++n)
      for (bool strict : {false, true})
        rec.expect_equal(cell(n) + (strict ? " strict" : " weak"), BigRat(count_of(enumerate_mat(n, strict).size())),
                         caylerian_brute(n, strict).eval_at(2));
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("beta formulas = brute force = row-sum filtered matrices", upto("n", b.enum_n));
    for (std::size_t n = 1; n <= b.enum_n; ++n) {
      BigInt equal_total = 0;
      for (const auto& spec : AscentSetSpec::all(n)) {
        for (bool strict : {false, true}) {
          const std::string at = spec.to_string() + (strict ? " strict" : " weak");
          const BigInt brute = beta_brute(spec, strict, AscentMode::Subset);
          rec.expect_equal(at, brute, beta_formula(spec, strict));
          // strict ascents pair with general matrices, weak ascents with binary ones
          rec.expect_equal(at + " Mat(S)", brute, count_of(enumerate_mat(n, !strict, spec).size()));
          rec.expect_equal(at + " lambda", beta_brute(spec, strict, AscentMode::Equal), lambda_inclexcl(spec, strict));
        }
        equal_total += beta_brute(spec, false, AscentMode::Equal);
        rec.expect_equal(spec.to_string() + " alpha", alpha_brute(spec), alpha_count(spec));
        rec.expect_equal(spec.to_string() + " determinant", beta_perm_brute(spec), beta_perm_determinant(spec));
      }
      rec.expect_equal(cell(n) + " sum of lambda", fubini(n), equal_total);
    }
    report.checks.push_back(rec.finish());
  }
  return report;
}

VerificationReport verify_pairing(const SuiteBounds& b) {
  VerificationReport report;
  if (b.formula_m >= 1) report.checks.push_back(pairing_check(b.formula_n, b.formula_m).as_check());
  return report;
}

VerificationReport double_sum_check(std::size_t n_max) {
  VerificationReport report;
  for (bool binary : {true, false}) {
    CheckRecorder rec(binary ? "double sum |BMat[n]|" : "double sum |Mat[n]| (conjecture-check)", upto("n", n_max));
    try {
      for (std::size_t n = 0; n <= n_max; ++n)
        rec.expect_equal(cell(n), count_mat(n, binary, CountMethod::Stirling), mat_double_sum(n, binary).rounded);
    } catch (const UnconvergedError& e) {
      rec.unconverged(e.what());
    }
    report.checks.push_back(rec.finish());
  }
  return report;
}

VerificationReport verify_gf(const SuiteBounds& b) {
  VerificationReport report;
  report.merge(halving_gf_check(b.formula_n, BigRat(1, 4)));
  report.merge(double_sum_check(b.formula_n));
  report.merge(species_table_check(b.formula_n, b.formula_m));
  return report;
}

VerificationReport run_suite(const std::string& name, const SuiteBounds& b) {
  if (name == "all") {
    VerificationReport all;
    for (const auto& s : suite_names()) all.merge(run_suite(s, b));
    return all;
  }
  static const std::map<std::string, VerificationReport (*)(const SuiteBounds&)> suites{
      {"kernel", verify_kernel},     {"bijections", verify_bijections}, {"involutions", verify_involutions},
      {"formulas", verify_formulas}, {"pairing", verify_pairing},       {"gf", verify_gf}};
  auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(b);
}

}  // namespace caylerian
