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

#include "caylerian/lomat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace caylerian {

// --- LinOrderMatrix -------------------------------------------------------------

LinOrderMatrix::LinOrderMatrix(Grid<Word> entries, bool allow_empty_columns) : entries_(std::move(entries)) {
  std::vector<Letter> all;
  for (const auto& e : entries_.cells()) all.insert(all.end(), e.begin(), e.end());
  size_ = all.size();
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<Letter>(i + 1))
      throw std::invalid_argument("matrix entries must be disjoint linear orders covering [n]");
  if (!allow_empty_columns)
    for (std::size_t c = 0; c < cols(); ++c)
      if (column_empty(c)) throw std::invalid_argument("matrix column " + std::to_string(c + 1) + " is empty");
}

LinOrderMatrix LinOrderMatrix::from_rows(const std::vector<std::vector<Word>>& rows, bool allow_empty_columns) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Grid<Word> g(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) g(r, c) = rows[r][c];
  }
  return LinOrderMatrix(std::move(g), allow_empty_columns);
}

LinOrderMatrix LinOrderMatrix::empty(std::size_t rows) { return LinOrderMatrix(Grid<Word>(rows, 0)); }

bool LinOrderMatrix::column_empty(std::size_t c) const {
  for (std::size_t r = 0; r < rows(); ++r)
    if (!entries_(r, c).empty()) return false;
  return true;
}

bool LinOrderMatrix::row_empty(std::size_t r) const {
  for (std::size_t c = 0; c < cols(); ++c)
    if (!entries_(r, c).empty()) return false;
  return true;
}

bool LinOrderMatrix::has_empty_row() const {
  for (std::size_t r = 0; r < rows(); ++r)
    if (row_empty(r)) return true;
  return false;
}

bool LinOrderMatrix::is_normalized() const {
  Letter expect = 1;
  for (std::size_t c = 0; c < cols(); ++c)
    for (std::size_t r = 0; r < rows(); ++r)
      for (Letter x : entries_(r, c))
        if (x != expect++) return false;
  return true;
}

bool LinOrderMatrix::is_binary() const {
  return std::all_of(entries_.cells().begin(), entries_.cells().end(), [](const Word& e) { return e.size() <= 1; });
}

Grid<int> LinOrderMatrix::lengths() const {
  Grid<int> g(rows(), cols(), 0);
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) g(r, c) = static_cast<int>(entries_(r, c).size());
  return g;
}

std::vector<std::size_t> LinOrderMatrix::row_lengths() const {
  std::vector<std::size_t> out(rows(), 0);
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) out[r] += entries_(r, c).size();
  return out;
}

std::string LinOrderMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows(); ++r) {
    if (r) os << " / ";
    for (std::size_t c = 0; c < cols(); ++c) {
      if (c) os << ' ';
      const Word& e = entries_(r, c);
      os << (e.empty() ? std::string(".") : render_word(e));
    }
  }
  os << ']';
  return os.str();
}

// --- action and atoms -----------------------------------------------------------

LinearOrderWord prod(const LinOrderMatrix& m) {
  Word w;
  w.reserve(m.size());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) w.insert(w.end(), m(r, c).begin(), m(r, c).end());
  return LinearOrderWord(std::move(w));
}

namespace {

LinOrderMatrix relabel(const LinearOrderWord& w, const LinOrderMatrix& a) {
  Grid<Word> g = a.entries();
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      for (auto& x : g(r, c)) x = w.apply(x);
  return LinOrderMatrix(std::move(g), true);
}

}  // namespace

LinOrderMatrix act(const LinearOrderWord& w, const LinOrderMatrix& a) {
  if (w.size() != a.size())
    throw std::invalid_argument("act: permutation of size " + std::to_string(w.size()) + " on matrix of size " +
                                std::to_string(a.size()));
  if (!a.is_normalized()) throw std::invalid_argument("act: matrix is not normalized");
  return relabel(w, a);
}

std::pair<LinearOrderWord, LinOrderMatrix> unact(const LinOrderMatrix& m) {
  LinearOrderWord w = prod(m);
  return {w, relabel(w.inverse(), m)};
}

std::vector<Word> split_connected(const Word& w) {
  // each part starts at a left-to-right minimum, so its first letter is the running minimum
  std::vector<Word> parts;
  for (Letter x : w) {
    if (parts.empty() || x < parts.back().front())
      parts.push_back({x});
    else
      parts.back().push_back(x);
  }
  return parts;
}

std::vector<Word> atoms(const LinOrderMatrix& m) {
  std::vector<Word> out;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (auto& a : split_connected(m(r, c))) out.push_back(std::move(a));
  return out;
}

int xi_atoms(const LinOrderMatrix& m) { return (m.size() - atoms(m).size()) % 2 == 0 ? 1 : -1; }

// --- atom ballots ---------------------------------------------------------------

namespace {

void sort_atoms(std::vector<PlacedAtom>& atoms) {
  std::sort(atoms.begin(), atoms.end(), [](const PlacedAtom& a, const PlacedAtom& b) {
    if (a.column != b.column) return a.column < b.column;
    if (a.row != b.row) return a.row < b.row;
    return a.letters.front() > b.letters.front();
  });
}

}  // namespace

AtomBallot::AtomBallot(RowMode mode, std::size_t row_count, std::size_t column_count, std::vector<PlacedAtom> atoms)
    : mode_(mode), row_count_(row_count), column_count_(column_count), atoms_(std::move(atoms)) {
  for (const auto& a : atoms_) {
    if (a.letters.empty()) throw std::invalid_argument("atom ballot contains an empty atom");
    if (*std::min_element(a.letters.begin(), a.letters.end()) != a.letters.front())
      throw std::invalid_argument("atom " + render_word(a.letters) + " does not begin with its minimum");
    if (a.column < 1 || a.column > column_count_) throw std::invalid_argument("atom column out of range");
    if (a.row < 1) throw std::invalid_argument("atom row index must be positive");
  }
  sort_atoms(atoms_);
}

std::string AtomBallot::to_string() const {
  std::ostringstream os;
  std::size_t i = 0;
  for (std::size_t col = 1; col <= column_count_; ++col) {
    os << '{';
    bool first = true;
    for (; i < atoms_.size() && atoms_[i].column == col; ++i) {
      os << (first ? "" : ",") << render_word(atoms_[i].letters) << '_' << atoms_[i].row;
      first = false;
    }
    os << '}';
  }
  return os.str();
}

AtomBallot to_atom_ballot(const LinOrderMatrix& m, RowMode mode) {
  if (mode == RowMode::Ballot && m.has_empty_row())
    throw std::invalid_argument("ballot row mode needs every row to contain a nonempty entry");
  std::vector<PlacedAtom> placed;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (auto& a : split_connected(m(r, c))) placed.push_back({std::move(a), c + 1, r + 1});
  return AtomBallot(mode, m.rows(), m.cols(), std::move(placed));
}

LinOrderMatrix from_atom_ballot(const AtomBallot& b, std::size_t rows) {
  Grid<Word> g(rows, b.column_count());
  std::vector<bool> column_hit(b.column_count(), false);
  std::vector<bool> row_hit(rows, false);
  // atoms() is sorted by (column, row, decreasing first letter), so appending
  // in order concatenates each cell's atoms by decreasing first letter
  for (const auto& a : b.atoms()) {
    if (a.row > rows)
      throw std::invalid_argument("atom row " + std::to_string(a.row) + " exceeds " + std::to_string(rows) + " rows");
    Word& cell = g(a.row - 1, a.column - 1);
    cell.insert(cell.end(), a.letters.begin(), a.letters.end());
    column_hit[a.column - 1] = true;
    row_hit[a.row - 1] = true;
  }
  for (bool hit : column_hit)
    if (!hit) throw std::invalid_argument("column block of the atom ballot is empty");
  if (b.mode() == RowMode::Ballot)
    for (bool hit : row_hit)
      if (!hit) throw std::invalid_argument("row block of the atom ballot is empty");
  return LinOrderMatrix(std::move(g));
}

// --- enumeration ----------------------------------------------------------------

namespace {

/// Weak compositions of `total` into `parts` parts, each at most `cap`.
void weak_compositions(std::size_t total, std::size_t parts, std::size_t cap,
                       const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> current(parts, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i + 1 >= parts) {
      if (parts == 0) {
        if (left == 0) visit(current);
        return;
      }
      if (left > cap) return;
      current[i] = left;
      visit(current);
      return;
    }
    for (std::size_t a = 0; a <= std::min(left, cap); ++a) {
      current[i] = a;
      rec(i + 1, left - a);
    }
    current[i] = 0;
  };
  rec(0, total);
}

/// Fills a rows x cols grid with consecutive letters, column-major, given
/// entry lengths listed column-major.
Grid<Word> fill_normalized(std::size_t rows, std::size_t cols, const std::vector<std::size_t>& lengths) {
  Grid<Word> g(rows, cols);
  Letter next = 1;
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t k = 0; k < lengths[c * rows + r]; ++k) g(r, c).push_back(next++);
  return g;
}

}  // namespace

std::vector<LinOrderMatrix> enumerate_genmat(std::size_t m, std::size_t n, bool binary) {
  std::vector<LinOrderMatrix> out;
  if (m == 0) {
    if (n == 0) out.push_back(LinOrderMatrix::empty(0));
    return out;
  }
  const std::size_t cap = binary ? 1 : n;
  for (const auto& column_sums : compositions(n)) {
    const std::size_t k = column_sums.size();
    std::vector<std::size_t> lengths(m * k, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
      if (c == k) {
        out.emplace_back(fill_normalized(m, k, lengths));
        return;
      }
      weak_compositions(column_sums[c], m, cap, [&](const std::vector<std::size_t>& col) {
        std::copy(col.begin(), col.end(), lengths.begin() + static_cast<std::ptrdiff_t>(c * m));
        rec(c + 1);
      });
    };
    rec(0);
  }
  return out;
}

void for_each_lomat(std::size_t m, std::size_t n, const std::function<void(const LinOrderMatrix&)>& visit) {
  if (m == 0) {
    if (n == 0) visit(LinOrderMatrix::empty(0));
    return;
  }
  for (const auto& ballot : enumerate_ballots(n)) {
    const auto& blocks = ballot.blocks();
    const std::size_t k = blocks.size();
    Grid<Word> g(m, k);
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
      if (c == k) {
        visit(LinOrderMatrix(g));
        return;
      }
      Word order = blocks[c];  // sorted: start from the first permutation
      do {
        weak_compositions(order.size(), m, order.size(), [&](const std::vector<std::size_t>& cut) {
          std::size_t pos = 0;
          for (std::size_t r = 0; r < m; ++r) {
            g(r, c).assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
                           order.begin() + static_cast<std::ptrdiff_t>(pos + cut[r]));
            pos += cut[r];
          }
          rec(c + 1);
        });
      } while (std::next_permutation(order.begin(), order.end()));
      for (std::size_t r = 0; r < m; ++r) g(r, c).clear();
    };
    rec(0);
  }
}

// --- signed structures ---------------------------------------------------------

SignedLOMatrix::SignedLOMatrix(LinOrderMatrix base, std::vector<int> signs)
    : base_(std::move(base)), signs_(std::move(signs)) {
  if (signs_.size() != base_.cols()) throw std::invalid_argument("one sign per column is required");
  if (base_.cols() > base_.size()) throw std::invalid_argument("signed matrix has more columns than letters");
  if (!base_.is_normalized()) throw std::invalid_argument("signed matrix is not normalized");
  for (std::size_t c = 0; c < signs_.size(); ++c) {
    if (signs_[c] != 1 && signs_[c] != -1) throw std::invalid_argument("column signs must be +1 or -1");
    if (signs_[c] == -1 && !base_.column_empty(c))
      throw std::invalid_argument("nonempty column " + std::to_string(c + 1) + " must be positive");
  }
}

std::string SignedLOMatrix::to_string() const {
  std::string s;
  for (int x : signs_) s += x > 0 ? '+' : '-';
  return s + " " + base_.to_string();
}

int xi_columns(const SignedLOMatrix& a) {
  int xi = 1;
  for (int s : a.signs()) xi *= s;
  return xi;
}

SignMetadata sign_metadata(const SignedLOMatrix& a) { return {xi_columns(a), xi_atoms(a.base())}; }

std::vector<SignedLOMatrix> enumerate_signed(std::size_t m, std::size_t n, const std::optional<AscentSetSpec>& row_sums,
                                             bool binary) {
  std::optional<std::vector<std::size_t>> wanted;
  if (row_sums) wanted = row_sums->delta();
  std::vector<SignedLOMatrix> out;
  const std::size_t cap = binary ? 1 : n;
  for (std::size_t k = 0; k <= n; ++k) {
    weak_compositions(n, m * k, cap, [&](const std::vector<std::size_t>& lengths) {
      LinOrderMatrix base(fill_normalized(m, k, lengths), true);
      if (wanted && base.row_lengths() != *wanted) return;
      std::vector<std::size_t> empty_cols;
      for (std::size_t c = 0; c < k; ++c)
        if (base.column_empty(c)) empty_cols.push_back(c);
      for (unsigned long mask = 0; mask < (1UL << empty_cols.size()); ++mask) {
        std::vector<int> signs(k, 1);
        for (std::size_t i = 0; i < empty_cols.size(); ++i)
          if (mask >> i & 1) signs[empty_cols[i]] = -1;
        out.emplace_back(base, std::move(signs));
      }
    });
  }
  return out;
}

std::size_t leftmost_empty_column(const SignedLOMatrix& a) {
  for (std::size_t c = 0; c < a.base().cols(); ++c)
    if (a.base().column_empty(c)) return c + 1;
  return 0;
}

SignedLOMatrix gamma(const SignedLOMatrix& a) {
  const std::size_t lambda = leftmost_empty_column(a);
  if (lambda == 0) return a;
  std::vector<int> signs = a.signs();
  signs[lambda - 1] = -signs[lambda - 1];
  return SignedLOMatrix(a.base(), std::move(signs));
}

LinOrderMatrix tau(const LinOrderMatrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c).size() >= 2) {
        Grid<Word> g = m.entries();
        std::swap(g(r, c)[0], g(r, c)[1]);
        return LinOrderMatrix(std::move(g), true);
      }
  return m;
}

}  // namespace caylerian
