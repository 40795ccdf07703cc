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
#include <string>
#include <vector>

#include "caylerian/grid.hpp"
#include "caylerian/poly.hpp"
#include "caylerian/words.hpp"

namespace caylerian {

/// Biword (u, v): u weakly increasing, Des(u) inside Des(v).
/// The binary variant additionally needs Des(u) inside Des°(v).
struct BurgeWord {
  CayleyWord top;
  CayleyWord bottom;

  /// Throws std::invalid_argument if the pair is not a (binary) Burge word.
  BurgeWord(CayleyWord u, CayleyWord v, bool binary = false);

  std::size_t size() const { return top.size(); }
  bool is_binary() const;
  std::string to_string() const;

  friend auto operator<=>(const BurgeWord&, const BurgeWord&) = default;
};

/// Nonnegative integer matrix with no zero row and no zero column.
class BurgeMatrix {
 public:
  BurgeMatrix() = default;
  /// Throws std::invalid_argument on a zero row or column (or a negative entry).
  explicit BurgeMatrix(Grid<int> entries);
  /// Row-major nested initializer, e.g. {{1,0,2},{0,4,0}}.
  static BurgeMatrix from_rows(const std::vector<std::vector<int>>& rows);

  const Grid<int>& entries() const { return entries_; }
  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }
  int operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
  std::size_t size() const;
  bool is_binary() const;
  std::vector<std::size_t> row_sums() const;
  std::string to_string() const;

  friend auto operator<=>(const BurgeMatrix&, const BurgeMatrix&) = default;

 private:
  Grid<int> entries_;
};

BurgeMatrix word_to_matrix(const BurgeWord& bw);
BurgeWord matrix_to_word(const BurgeMatrix& a);

/// All (u, v) with u weakly increasing, v in Cay[n], ordered by u then v.
std::vector<BurgeWord> enumerate_burge(std::size_t n, bool binary);

/// Images of enumerate_burge; with `row_sums` only matrices whose row-sum
/// vector is Delta(S). Throws std::invalid_argument if row_sums->n() != n.
std::vector<BurgeMatrix> enumerate_mat(std::size_t n, bool binary,
                                       const std::optional<AscentSetSpec>& row_sums = std::nullopt);

/// Joint (row count, column count) distribution over Mat[n] or BMat[n].
BiPoly two_sided_brute(std::size_t n, bool binary);

}  // namespace caylerian
