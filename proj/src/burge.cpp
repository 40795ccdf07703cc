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

#include "caylerian/burge.hpp"

#include <sstream>
#include <stdexcept>

namespace caylerian {

namespace {

bool weakly_increasing(const CayleyWord& u) {
  for (std::size_t i = 0; i + 1 < u.size(); ++i)
    if (u[i] > u[i + 1]) return false;
  return true;
}

}  // namespace

BurgeWord::BurgeWord(CayleyWord u, CayleyWord v, bool binary) : top(std::move(u)), bottom(std::move(v)) {
  if (top.size() != bottom.size()) throw std::invalid_argument("Burge word rows differ in length");
  if (!weakly_increasing(top)) throw std::invalid_argument("Burge word top row is not weakly increasing");
  const unsigned long des_u = stat_mask(top.letters(), StatKind::WeakDescent);
  const unsigned long des_v =
      stat_mask(bottom.letters(), binary ? StatKind::StrictDescent : StatKind::WeakDescent);
  if ((des_u & ~des_v) != 0)
    throw std::invalid_argument("descent containment fails for Burge word " + to_string());
}

bool BurgeWord::is_binary() const {
  const unsigned long des_u = stat_mask(top.letters(), StatKind::WeakDescent);
  return (des_u & ~stat_mask(bottom.letters(), StatKind::StrictDescent)) == 0;
}

std::string BurgeWord::to_string() const { return "(" + top.to_string() + "," + bottom.to_string() + ")"; }

BurgeMatrix::BurgeMatrix(Grid<int> entries) : entries_(std::move(entries)) {
  std::vector<bool> row_hit(rows(), false), col_hit(cols(), false);
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) {
      if (entries_(r, c) < 0) throw std::invalid_argument("Burge matrix entry is negative");
      if (entries_(r, c) > 0) row_hit[r] = col_hit[c] = true;
    }
  for (bool hit : row_hit)
    if (!hit) throw std::invalid_argument("Burge matrix has a zero row");
  for (bool hit : col_hit)
    if (!hit) throw std::invalid_argument("Burge matrix has a zero column");
}

BurgeMatrix BurgeMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Grid<int> g(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) g(r, c) = rows[r][c];
  }
  return BurgeMatrix(std::move(g));
}

std::size_t BurgeMatrix::size() const {
  std::size_t n = 0;
  for (int x : entries_.cells()) n += static_cast<std::size_t>(x);
  return n;
}

bool BurgeMatrix::is_binary() const {
  for (int x : entries_.cells())
    if (x > 1) return false;
  return true;
}

std::vector<std::size_t> BurgeMatrix::row_sums() const {
  std::vector<std::size_t> sums(rows(), 0);
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) sums[r] += static_cast<std::size_t>(entries_(r, c));
  return sums;
}

std::string BurgeMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols(); ++c) os << (c ? "," : "") << entries_(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

BurgeMatrix word_to_matrix(const BurgeWord& bw) {
  const auto rows = static_cast<std::size_t>(bw.top.max());
  const auto cols = static_cast<std::size_t>(bw.bottom.max());
  Grid<int> g(rows, cols, 0);
  for (std::size_t l = 0; l < bw.size(); ++l) ++g(bw.top[l] - 1, bw.bottom[l] - 1);
  return BurgeMatrix(std::move(g));
}

BurgeWord matrix_to_word(const BurgeMatrix& a) {
  Word u, v;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = a.cols(); c-- > 0;)
      for (int k = 0; k < a(r, c); ++k) {
        u.push_back(static_cast<Letter>(r + 1));
        v.push_back(static_cast<Letter>(c + 1));
      }
  return BurgeWord(CayleyWord(std::move(u)), CayleyWord(std::move(v)), false);
}

std::vector<BurgeWord> enumerate_burge(std::size_t n, bool binary) {
  struct Bottom {
    Word letters;
    unsigned long des;
  };
  std::vector<Bottom> bottoms;
  const StatKind kind = binary ? StatKind::StrictDescent : StatKind::WeakDescent;
  for_each_cayley(n, [&](const Word& w) { bottoms.push_back({w, stat_mask(w, kind)}); });

  std::vector<BurgeWord> out;
  for (const auto& u : enumerate_weakly_increasing(n)) {
    const unsigned long des_u = stat_mask(u.letters(), StatKind::WeakDescent);
    for (const auto& b : bottoms)
      if ((des_u & ~b.des) == 0) out.emplace_back(u, CayleyWord(b.letters), binary);
  }
  return out;
}

std::vector<BurgeMatrix> enumerate_mat(std::size_t n, bool binary, const std::optional<AscentSetSpec>& row_sums) {
  if (row_sums && row_sums->n() != n)
    throw std::invalid_argument("row-sum specification is for size " + std::to_string(row_sums->n()) +
                                ", expected " + std::to_string(n));
  const std::optional<std::vector<std::size_t>> wanted =
      row_sums ? std::optional(row_sums->delta()) : std::nullopt;
  std::vector<BurgeMatrix> out;
  for (const auto& bw : enumerate_burge(n, binary)) {
    BurgeMatrix a = word_to_matrix(bw);
    if (wanted && a.row_sums() != *wanted) continue;
    out.push_back(std::move(a));
  }
  return out;
}

BiPoly two_sided_brute(std::size_t n, bool binary) {
  BiPoly p;
  for (const auto& a : enumerate_mat(n, binary)) p.add_term(a.rows(), a.cols(), 1);
  return p;
}

}  // namespace caylerian
