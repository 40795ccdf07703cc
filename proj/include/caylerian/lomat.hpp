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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caylerian/grid.hpp"
#include "caylerian/words.hpp"

namespace caylerian {

/**
 * Matrix whose entries are linear orders (possibly empty words) over
 * pairwise-disjoint letter sets covering [n].
 *
 * Unless constructed with allow_empty_columns, every column holds at least
 * one nonempty entry, which makes the matrix a structure of L o (L^m)_+.
 * A matrix whose column-major concatenation is 12...n is "normalized"
 * (a Genmat_m-structure).
 */
class LinOrderMatrix {
 public:
  LinOrderMatrix() = default;
  /// Throws std::invalid_argument when the letters do not partition [n]
  /// or, unless allowed, a column is empty.
  explicit LinOrderMatrix(Grid<Word> entries, bool allow_empty_columns = false);
  /// Rows of entries; an empty Word is an empty entry.
  static LinOrderMatrix from_rows(const std::vector<std::vector<Word>>& rows, bool allow_empty_columns = false);
  /// m x 0 matrix of size zero.
  static LinOrderMatrix empty(std::size_t rows);

  const Grid<Word>& entries() const { return entries_; }
  const Word& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }
  std::size_t size() const { return size_; }

  bool column_empty(std::size_t c) const;
  bool row_empty(std::size_t r) const;
  bool has_empty_row() const;
  bool is_normalized() const;
  /// Every entry has length at most one.
  bool is_binary() const;
  /// Entry lengths: the nonnegative integer matrix underneath.
  Grid<int> lengths() const;
  std::vector<std::size_t> row_lengths() const;

  std::string to_string() const;

  friend auto operator<=>(const LinOrderMatrix&, const LinOrderMatrix&) = default;

 private:
  Grid<Word> entries_;
  std::size_t size_ = 0;
};

/// Concatenation of the entries column by column, top to bottom within a column.
LinearOrderWord prod(const LinOrderMatrix& m);

/// Replaces every letter c of the normalized matrix `a` with w(c).
/// Throws std::invalid_argument on a size mismatch or a non-normalized `a`.
LinOrderMatrix act(const LinearOrderWord& w, const LinOrderMatrix& a);

/// Inverse of act: M -> (prod M, prod(M)^{-1} . M).
std::pair<LinearOrderWord, LinOrderMatrix> unact(const LinOrderMatrix& m);

/// Splits a word at its left-to-right minima.
std::vector<Word> split_connected(const Word& w);

/// Atoms of every entry, in the order they appear in prod(m).
std::vector<Word> atoms(const LinOrderMatrix& m);

/// (-1)^(n - number of atoms)
int xi_atoms(const LinOrderMatrix& m);

enum class RowMode { Color, Ballot };

struct PlacedAtom {
  Word letters;
  std::size_t column;  // 1-based block of the column ballot
  std::size_t row;     // 1-based color, or block of the row ballot

  friend auto operator<=>(const PlacedAtom&, const PlacedAtom&) = default;
};

/**
 * Ballot of atoms (connected linear orders). Each atom sits in one block of
 * the column ballot and carries either a color in [m] or a block index of a
 * second ballot describing rows.
 */
class AtomBallot {
 public:
  AtomBallot(RowMode mode, std::size_t row_count, std::size_t column_count, std::vector<PlacedAtom> atoms);

  RowMode mode() const { return mode_; }
  std::size_t row_count() const { return row_count_; }
  std::size_t column_count() const { return column_count_; }
  /// Sorted by column, then row, then decreasing first letter.
  const std::vector<PlacedAtom>& atoms() const { return atoms_; }
  std::string to_string() const;

  friend bool operator==(const AtomBallot&, const AtomBallot&) = default;

 private:
  RowMode mode_;
  std::size_t row_count_;
  std::size_t column_count_;
  std::vector<PlacedAtom> atoms_;
};

/// Throws std::invalid_argument in Ballot mode when m has an empty row.
AtomBallot to_atom_ballot(const LinOrderMatrix& m, RowMode mode);
/// Throws std::invalid_argument on a color above `rows`, a non-connected atom,
/// an empty column block, or (Ballot mode) an empty row block.
LinOrderMatrix from_atom_ballot(const AtomBallot& b, std::size_t rows);

/// Normalized m-row matrices of size n (entries of length <= 1 if binary).
std::vector<LinOrderMatrix> enumerate_genmat(std::size_t m, std::size_t n, bool binary);

/// Every L o (L^m)_+ structure on [n], built from a ballot of columns and,
/// per column, a linear order cut into m consecutive pieces.
void for_each_lomat(std::size_t m, std::size_t n, const std::function<void(const LinOrderMatrix&)>& visit);

/// Normalized matrix with a sign per column; empty columns may be negative.
class SignedLOMatrix {
 public:
  /// Throws std::invalid_argument if a nonempty column is negative, there are
  /// more columns than letters, signs are not +-1, or the base is not normalized.
  SignedLOMatrix(LinOrderMatrix base, std::vector<int> signs);

  const LinOrderMatrix& base() const { return base_; }
  const std::vector<int>& signs() const { return signs_; }
  std::string to_string() const;

  friend auto operator<=>(const SignedLOMatrix&, const SignedLOMatrix&) = default;

 private:
  LinOrderMatrix base_;
  std::vector<int> signs_;
};

struct SignMetadata {
  int xi_columns;  // (-1)^(negative columns)
  int xi_atoms;    // (-1)^(n - atoms)
};

SignMetadata sign_metadata(const SignedLOMatrix& a);
int xi_columns(const SignedLOMatrix& a);

/// Signed m-row structures of size n with at most n columns. With row_sums,
/// only those whose row lengths equal Delta(S); with binary, entries of length <= 1.
std::vector<SignedLOMatrix> enumerate_signed(std::size_t m, std::size_t n,
                                             const std::optional<AscentSetSpec>& row_sums = std::nullopt,
                                             bool binary = false);

/// 1-based index of the leftmost empty column, 0 if there is none.
std::size_t leftmost_empty_column(const SignedLOMatrix& a);

/// Flips the sign of the leftmost empty column.
SignedLOMatrix gamma(const SignedLOMatrix& a);

/// Swaps the first two letters of the first entry (in prod order) of length >= 2.
LinOrderMatrix tau(const LinOrderMatrix& m);

}  // namespace caylerian
