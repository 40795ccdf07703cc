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
#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "caylerian/identities.hpp"

namespace caylerian {

/// Malformed b-file content or an unreadable file.
class BFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Network retrieval failed (or was compiled out).
class FetchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BFile {
  std::string id;
  std::vector<std::pair<long, BigInt>> entries;  // strictly increasing indices
};

/// Lines are "index value"; blank lines and lines starting with '#' are skipped.
BFile parse_bfile(std::istream& in, const std::string& id);
BFile load_bfile(const std::filesystem::path& path, const std::string& id);

/// "A120733" -> "b120733.txt". Throws std::invalid_argument on a malformed id.
std::string bfile_name(const std::string& id);

/// Sequences the engine can produce.
const std::vector<std::string>& supported_sequences();

/// Engine values indexed as in the bundled b-files, for terms whose
/// underlying n is at most max_n. For the triangle, rows 1..max_n are
/// flattened in row order with the first entry at index 1.
/// `method` selects Stirling or Enumerate for the matrix counts.
std::vector<std::pair<long, BigInt>> engine_terms(const std::string& id, std::size_t max_n,
                                                  CountMethod method = CountMethod::Stirling);

struct OeisComparison {
  std::size_t compared = 0;
  std::optional<long> first_mismatch;
  BigInt expected;  // from the b-file, at first_mismatch
  BigInt actual;    // from the engine
  bool ok() const { return !first_mismatch && compared > 0; }
};

/// Compares every engine term whose index appears in the file.
OeisComparison compare_terms(const BFile& file, const std::vector<std::pair<long, BigInt>>& terms);

/// $CAYLERIAN_DATA_DIR if set, else the source-tree data/oeis directory.
std::filesystem::path bundled_dir();

/// $CAYLERIAN_CACHE_DIR, else $XDG_CACHE_HOME/caylerian, else ~/.cache/caylerian.
std::filesystem::path cache_dir();

/// Returns the cached b-file for `id`, downloading it into `dir` first if absent.
std::filesystem::path fetch_bfile(const std::string& id, const std::filesystem::path& dir);

}  // namespace caylerian
