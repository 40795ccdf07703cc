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

#include "caylerian/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace caylerian {

std::string render_word(std::span<const Letter> w) {
  const bool short_letters = std::all_of(w.begin(), w.end(), [](Letter x) { return x >= 0 && x < 10; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!short_letters && i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

// --- CayleyWord ---------------------------------------------------------------

bool CayleyWord::is_valid(std::span<const Letter> letters) {
  const std::size_t n = letters.size();
  std::vector<bool> seen(n + 1, false);
  Letter top = 0;
  for (Letter x : letters) {
    if (x < 1 || static_cast<std::size_t>(x) > n) return false;
    seen[x] = true;
    top = std::max(top, x);
  }
  for (Letter v = 1; v <= top; ++v)
    if (!seen[v]) return false;
  return true;
}

CayleyWord::CayleyWord(Word letters) : letters_(std::move(letters)) {
  if (!is_valid(letters_)) throw std::invalid_argument("not a Cayley word: " + render_word(letters_));
}

Letter CayleyWord::max() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

// --- LinearOrderWord -----------------------------------------------------------

LinearOrderWord::LinearOrderWord(Word letters) : letters_(std::move(letters)) {
  Word sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<Letter>(i + 1))
      throw std::invalid_argument("not a permutation: " + render_word(letters_));
}

LinearOrderWord LinearOrderWord::identity(std::size_t n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  return LinearOrderWord(std::move(w));
}

LinearOrderWord LinearOrderWord::inverse() const {
  Word inv(letters_.size());
  for (std::size_t i = 0; i < letters_.size(); ++i) inv[letters_[i] - 1] = static_cast<Letter>(i + 1);
  return LinearOrderWord(std::move(inv));
}

// --- Ballot -----------------------------------------------------------------

Ballot::Ballot(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::vector<Letter> all;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("ballot has an empty block");
    std::sort(b.begin(), b.end());
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<Letter>(i + 1))
      throw std::invalid_argument("ballot blocks must partition [n]");
}

std::size_t Ballot::size() const {
  std::size_t n = 0;
  for (const auto& b : blocks_) n += b.size();
  return n;
}

std::string Ballot::to_string() const {
  std::ostringstream os;
  for (const auto& b : blocks_) {
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << '}';
  }
  return os.str();
}

// --- AscentSetSpec ------------------------------------------------------------

AscentSetSpec::AscentSetSpec(std::size_t n, std::vector<std::size_t> set) : n_(n), set_(std::move(set)) {
  for (std::size_t i = 0; i < set_.size(); ++i) {
    if (set_[i] < 1 || set_[i] + 1 > n_) throw std::invalid_argument("ascent set element outside [n-1]");
    if (i && set_[i] <= set_[i - 1]) throw std::invalid_argument("ascent set must be strictly increasing");
  }
}

std::vector<std::size_t> AscentSetSpec::delta() const {
  std::vector<std::size_t> d;
  std::size_t prev = 0;
  for (std::size_t s : set_) {
    d.push_back(s - prev);
    prev = s;
  }
  d.push_back(n_ - prev);
  return d;
}

std::vector<AscentSetSpec> AscentSetSpec::all(std::size_t n) {
  std::vector<AscentSetSpec> out;
  const std::size_t bits = n > 0 ? n - 1 : 0;
  for (unsigned long mask = 0; mask < (1UL << bits); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < bits; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    out.emplace_back(n, std::move(s));
  }
  return out;
}

std::string AscentSetSpec::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << " S={";
  for (std::size_t i = 0; i < set_.size(); ++i) os << (i ? "," : "") << set_[i];
  os << '}';
  return os.str();
}

// --- enumeration -------------------------------------------------------------

namespace {

void cayley_rec(std::size_t n, Word& w, std::vector<int>& count, Letter top, std::size_t distinct,
                const std::function<void(const Word&)>& visit) {
  const std::size_t pos = w.size();
  if (pos == n) {
    if (distinct == static_cast<std::size_t>(top)) visit(w);
    return;
  }
  const std::size_t remaining = n - pos - 1;
  for (Letter x = 1; x <= static_cast<Letter>(n); ++x) {
    const Letter new_top = std::max(top, x);
    const std::size_t new_distinct = distinct + (count[x] == 0 ? 1 : 0);
    // values of [new_top] not yet used must fit in the remaining positions
    if (static_cast<std::size_t>(new_top) - new_distinct > remaining) {
      if (x > top) break;  // larger letters only widen the gap
      continue;
    }
    ++count[x];
    w.push_back(x);
    cayley_rec(n, w, count, new_top, new_distinct, visit);
    w.pop_back();
    --count[x];
  }
}

}  // namespace

void for_each_cayley(std::size_t n, const std::function<void(const Word&)>& visit) {
  Word w;
  w.reserve(n);
  std::vector<int> count(n + 2, 0);
  cayley_rec(n, w, count, 0, 0, visit);
}

std::vector<CayleyWord> enumerate_cayley(std::size_t n) {
  std::vector<CayleyWord> out;
  for_each_cayley(n, [&](const Word& w) { out.emplace_back(w); });
  return out;
}

namespace {

void ballot_rec(std::vector<Letter>& remaining, std::vector<Ballot::Block>& blocks, std::vector<Ballot>& out) {
  if (remaining.empty()) {
    out.emplace_back(blocks);
    return;
  }
  const std::size_t r = remaining.size();
  for (unsigned long mask = 1; mask < (1UL << r); ++mask) {
    Ballot::Block block;
    std::vector<Letter> rest;
    for (std::size_t i = 0; i < r; ++i) (mask >> i & 1 ? block : rest).push_back(remaining[i]);
    blocks.push_back(std::move(block));
    ballot_rec(rest, blocks, out);
    blocks.pop_back();
  }
}

}  // namespace

std::vector<Ballot> enumerate_ballots(std::size_t n) {
  std::vector<Letter> all(n);
  std::iota(all.begin(), all.end(), 1);
  std::vector<Ballot::Block> blocks;
  std::vector<Ballot> out;
  ballot_rec(all, blocks, out);
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_linear_order(std::size_t n, const std::function<void(const Word&)>& visit) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<std::vector<std::size_t>> compositions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return {{}};
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t a = 1; a <= left; ++a) {
      current.push_back(a);
      rec(left - a);
      current.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<CayleyWord> enumerate_weakly_increasing(std::size_t n) {
  std::vector<CayleyWord> out;
  for (const auto& parts : compositions(n)) {
    Word w;
    Letter letter = 1;
    for (std::size_t a : parts) {
      w.insert(w.end(), a, letter);
      ++letter;
    }
    out.emplace_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- bijections and statistics -----------------------------------------------

CayleyWord ballot_to_cayley(const Ballot& b) {
  Word w(b.size());
  for (std::size_t j = 0; j < b.blocks().size(); ++j)
    for (Letter i : b.blocks()[j]) w[i - 1] = static_cast<Letter>(j + 1);
  return CayleyWord(std::move(w));
}

Ballot cayley_to_ballot(const CayleyWord& w) {
  std::vector<Ballot::Block> blocks(w.max());
  for (std::size_t i = 0; i < w.size(); ++i) blocks[w[i] - 1].push_back(static_cast<Letter>(i + 1));
  return Ballot(std::move(blocks));
}

namespace {

bool stat_holds(Letter a, Letter b, StatKind kind) {
  switch (kind) {
    case StatKind::WeakDescent: return a >= b;
    case StatKind::StrictDescent: return a > b;
    case StatKind::WeakAscent: return a <= b;
    case StatKind::StrictAscent: return a < b;
  }
  return false;
}

}  // namespace

std::vector<std::size_t> stat_set(std::span<const Letter> w, StatKind kind) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (stat_holds(w[i], w[i + 1], kind)) out.push_back(i + 1);
  return out;
}

std::size_t stat_count(std::span<const Letter> w, StatKind kind) {
  std::size_t c = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) c += stat_holds(w[i], w[i + 1], kind);
  return c;
}

unsigned long stat_mask(std::span<const Letter> w, StatKind kind) {
  unsigned long mask = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (stat_holds(w[i], w[i + 1], kind)) mask |= 1UL << i;
  return mask;
}

CayleyWord reverse(const CayleyWord& w) {
  Word r(w.letters().rbegin(), w.letters().rend());
  return CayleyWord(std::move(r));
}

CayleyWord complement(const CayleyWord& w) {
  Word c = w.letters();
  const Letter top = w.max();
  for (auto& x : c) x = top + 1 - x;
  return CayleyWord(std::move(c));
}

// --- brute-force oracles -------------------------------------------------------

IntPoly caylerian_brute(std::size_t n, bool strict) {
  std::vector<BigInt> c(n + 1, BigInt(0));
  const StatKind kind = strict ? StatKind::StrictDescent : StatKind::WeakDescent;
  for_each_cayley(n, [&](const Word& w) { ++c[stat_count(w, kind)]; });
  return IntPoly(std::move(c));
}

BigInt alpha_count(const AscentSetSpec& spec) { return multinomial(spec.delta()); }

namespace {

unsigned long set_mask(const AscentSetSpec& spec) {
  unsigned long mask = 0;
  for (std::size_t s : spec.set()) mask |= 1UL << (s - 1);
  return mask;
}

}  // namespace

BigInt alpha_brute(const AscentSetSpec& spec) {
  const unsigned long allowed = set_mask(spec);
  unsigned long count = 0;
  for_each_linear_order(spec.n(), [&](const Word& w) {
    if ((stat_mask(w, StatKind::WeakAscent) & ~allowed) == 0) ++count;
  });
  return count;
}

BigInt beta_brute(const AscentSetSpec& spec, bool strict, AscentMode mode) {
  const unsigned long target = set_mask(spec);
  const StatKind kind = strict ? StatKind::StrictAscent : StatKind::WeakAscent;
  unsigned long count = 0;
  for_each_cayley(spec.n(), [&](const Word& w) {
    const unsigned long asc = stat_mask(w, kind);
    if (mode == AscentMode::Equal ? asc == target : (asc & ~target) == 0) ++count;
  });
  return count;
}

BigInt beta_perm_determinant(const AscentSetSpec& spec) {
  // s_0 = 0, s_1..s_r, s_{r+1} = n
  std::vector<long> s{0};
  for (std::size_t x : spec.set()) s.push_back(static_cast<long>(x));
  s.push_back(static_cast<long>(spec.n()));
  const std::size_t dim = s.size() - 1;

  std::vector<std::vector<BigRat>> a(dim, std::vector<BigRat>(dim));
  for (std::size_t i = 1; i <= dim; ++i)
    for (std::size_t j = 1; j <= dim; ++j) {
      const long arg = s[j] - s[i - 1];
      a[i - 1][j - 1] = arg < 0 ? BigRat(0) : BigRat(1) / BigRat(factorial(static_cast<std::size_t>(arg)));
    }

  BigRat det = 1;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && a[pivot][col] == 0) ++pivot;
    if (pivot == dim) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < dim; ++row) {
      if (a[row][col] == 0) continue;
      const BigRat f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < dim; ++k) a[row][k] -= f * a[col][k];
    }
  }
  return to_integer(det * BigRat(factorial(spec.n())));
}

BigInt beta_perm_brute(const AscentSetSpec& spec) {
  const unsigned long target = set_mask(spec);
  unsigned long count = 0;
  for_each_linear_order(spec.n(), [&](const Word& w) {
    if (stat_mask(w, StatKind::WeakAscent) == target) ++count;
  });
  return count;
}

}  // namespace caylerian
