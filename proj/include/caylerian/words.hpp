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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "caylerian/numbers.hpp"
#include "caylerian/poly.hpp"

namespace caylerian {

using Letter = int;
using Word = std::vector<Letter>;

/// Renders a word as concatenated digits when every letter is below 10,
/// comma-separated otherwise.
std::string render_word(std::span<const Letter> w);

/// A word whose set of letters is exactly {1, ..., max}.
class CayleyWord {
 public:
  CayleyWord() = default;
  /// Throws std::invalid_argument unless the letters form a Cayley word.
  explicit CayleyWord(Word letters);

  static bool is_valid(std::span<const Letter> letters);

  const Word& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter max() const;
  std::string to_string() const { return render_word(letters_); }

  friend auto operator<=>(const CayleyWord&, const CayleyWord&) = default;

 private:
  Word letters_;
};

/// One-line notation of a permutation of [n].
class LinearOrderWord {
 public:
  LinearOrderWord() = default;
  explicit LinearOrderWord(Word letters);
  static LinearOrderWord identity(std::size_t n);

  const Word& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  /// Image of the letter x, i.e. w(x) for x in [n].
  Letter apply(Letter x) const { return letters_.at(static_cast<std::size_t>(x - 1)); }
  LinearOrderWord inverse() const;
  std::string to_string() const { return render_word(letters_); }

  friend auto operator<=>(const LinearOrderWord&, const LinearOrderWord&) = default;

 private:
  Word letters_;
};

/// Ordered set partition; each block kept sorted ascending.
class Ballot {
 public:
  using Block = std::vector<Letter>;

  Ballot() = default;
  /// Throws std::invalid_argument unless the blocks are nonempty, disjoint and cover [n].
  explicit Ballot(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const;
  std::string to_string() const;

  friend auto operator<=>(const Ballot&, const Ballot&) = default;

 private:
  std::vector<Block> blocks_;
};

enum class StatKind { WeakDescent, StrictDescent, WeakAscent, StrictAscent };

/// Subset S of [n-1] describing an ascent set or row-sum vector.
class AscentSetSpec {
 public:
  /// Throws std::invalid_argument unless `set` is strictly increasing inside [n-1].
  AscentSetSpec(std::size_t n, std::vector<std::size_t> set);

  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& set() const { return set_; }
  /// (s_1, s_2 - s_1, ..., n - s_r)
  std::vector<std::size_t> delta() const;
  /// Every subset of [n-1], ordered by bitmask.
  static std::vector<AscentSetSpec> all(std::size_t n);
  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<std::size_t> set_;
};

// --- enumeration -----------------------------------------------------------

/// Calls `visit` for every Cayley word of length n in lexicographic order.
void for_each_cayley(std::size_t n, const std::function<void(const Word&)>& visit);
std::vector<CayleyWord> enumerate_cayley(std::size_t n);

std::vector<Ballot> enumerate_ballots(std::size_t n);

/// All permutations of [n] in lexicographic order.
void for_each_linear_order(std::size_t n, const std::function<void(const Word&)>& visit);

/// Weakly increasing Cayley words of length n, one per composition of n.
std::vector<CayleyWord> enumerate_weakly_increasing(std::size_t n);

/// All compositions of n in lexicographic order (n = 0 gives one empty composition).
std::vector<std::vector<std::size_t>> compositions(std::size_t n);

// --- bijections and statistics ---------------------------------------------

CayleyWord ballot_to_cayley(const Ballot& b);
Ballot cayley_to_ballot(const CayleyWord& w);

/// Positions i in [n-1] (1-based) satisfying the comparison of `kind`.
std::vector<std::size_t> stat_set(std::span<const Letter> w, StatKind kind);
std::size_t stat_count(std::span<const Letter> w, StatKind kind);
/// Bit i-1 set for each position i of stat_set.
unsigned long stat_mask(std::span<const Letter> w, StatKind kind);

CayleyWord reverse(const CayleyWord& w);
CayleyWord complement(const CayleyWord& w);

// --- brute-force oracles ----------------------------------------------------

/// Distribution of des (weak) or des° (strict) over Cay[n].
IntPoly caylerian_brute(std::size_t n, bool strict);

/// n! / prod Delta(S)!: linear orders with Asc contained in S.
BigInt alpha_count(const AscentSetSpec& spec);
/// Linear orders of [n] with Asc contained in S, counted directly.
BigInt alpha_brute(const AscentSetSpec& spec);

enum class AscentMode { Subset, Equal };

/// Cayley words whose (strict) ascent set is contained in, or equal to, S.
BigInt beta_brute(const AscentSetSpec& spec, bool strict, AscentMode mode);

/// Permutations with ascent set exactly S via n! det[1/(s_j - s_{i-1})!].
BigInt beta_perm_determinant(const AscentSetSpec& spec);
/// Permutations with ascent set exactly S, counted directly.
BigInt beta_perm_brute(const AscentSetSpec& spec);

}  // namespace caylerian
