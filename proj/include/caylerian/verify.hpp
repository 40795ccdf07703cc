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
#include <string>
#include <vector>

#include "caylerian/identities.hpp"

namespace caylerian {

/// Parameter bounds for the verification suites.
struct SuiteBounds {
  std::size_t enum_n = 5;      // exhaustive enumeration of words and matrices
  std::size_t enum_m = 3;      // rows in exhaustive matrix-of-orders checks
  std::size_t formula_n = 8;   // closed-form and series comparisons
  std::size_t formula_m = 6;
};

const std::vector<std::string>& suite_names();

VerificationReport verify_kernel(const SuiteBounds& b);
VerificationReport verify_bijections(const SuiteBounds& b);
VerificationReport verify_involutions(const SuiteBounds& b);
VerificationReport verify_formulas(const SuiteBounds& b);
VerificationReport verify_pairing(const SuiteBounds& b);
VerificationReport verify_gf(const SuiteBounds& b);

/// Double sums over r, s against the Stirling counts; the general
/// (multichoose) sum is labeled conjecture-check.
VerificationReport double_sum_check(std::size_t n_max);

/// Runs one suite by name ("all" runs every suite). Throws std::invalid_argument on an unknown name.
VerificationReport run_suite(const std::string& name, const SuiteBounds& b);

}  // namespace caylerian
