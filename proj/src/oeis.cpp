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

#include "caylerian/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifdef CAYLERIAN_HAVE_CURL
#include <curl/curl.h>
#endif

#ifndef CAYLERIAN_DATA_DIR
#define CAYLERIAN_DATA_DIR "data/oeis"
#endif

namespace caylerian {

namespace {

bool all_digits(const std::string& s, std::size_t from = 0) {
  if (s.size() <= from) return false;
  for (std::size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool is_integer_token(const std::string& s) { return all_digits(s, (!s.empty() && s[0] == '-') ? 1 : 0); }

}  // namespace

BFile parse_bfile(std::istream& in, const std::string& id) {
  BFile file{id, {}};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index, value, extra;
    fields >> index >> value;
    if (!is_integer_token(index) || !is_integer_token(value) || (fields >> extra))
      throw BFileError(id + ": malformed line " + std::to_string(line_no) + ": '" + line + "'");
    const long i = std::stol(index);
    if (!file.entries.empty() && i <= file.entries.back().first)
      throw BFileError(id + ": index " + index + " on line " + std::to_string(line_no) + " is not increasing");
    file.entries.emplace_back(i, BigInt(value));
  }
  return file;
}

BFile load_bfile(const std::filesystem::path& path, const std::string& id) {
  std::ifstream in(path);
  if (!in) throw BFileError("cannot read b-file " + path.string());
  return parse_bfile(in, id);
}

std::string bfile_name(const std::string& id) {
  if (id.size() != 7 || id[0] != 'A' || !all_digits(id, 1))
    throw std::invalid_argument("malformed sequence id '" + id + "' (expected A followed by six digits)");
  return "b" + id.substr(1) + ".txt";
}

const std::vector<std::string>& supported_sequences() {
  static const std::vector<std::string> ids{"A000670", "A120733", "A101370", "A366173"};
  return ids;
}

std::vector<std::pair<long, BigInt>> engine_terms(const std::string& id, std::size_t max_n, CountMethod method) {
  std::vector<std::pair<long, BigInt>> terms;
  if (id == "A000670") {
    for (std::size_t n = 0; n <= max_n; ++n) terms.emplace_back(static_cast<long>(n), fubini(n));
  } else if (id == "A120733" || id == "A101370") {
    const bool binary = id == "A101370";
    for (std::size_t n = 0; n <= max_n; ++n) terms.emplace_back(static_cast<long>(n), count_mat(n, binary, method));
  } else if (id == "A366173") {
    long index = 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
      const IntPoly p = caylerian_formula(n, false);
      for (std::size_t k = 0; k < n; ++k) terms.emplace_back(index++, p.coefficient(k));
    }
  } else {
    throw std::invalid_argument("unsupported sequence '" + id + "'");
  }
  return terms;
}

OeisComparison compare_terms(const BFile& file, const std::vector<std::pair<long, BigInt>>& terms) {
  OeisComparison result;
  auto it = file.entries.begin();
  for (const auto& [index, value] : terms) {
    while (it != file.entries.end() && it->first < index) ++it;
    if (it == file.entries.end()) break;
    if (it->first != index) continue;
    ++result.compared;
    if (it->second != value) {
      result.first_mismatch = index;
      result.expected = it->second;
      result.actual = value;
      break;
    }
  }
  return result;
}

std::filesystem::path bundled_dir() {
  if (const char* d = std::getenv("CAYLERIAN_DATA_DIR"); d && *d) return d;
  return CAYLERIAN_DATA_DIR;
}

std::filesystem::path cache_dir() {
  if (const char* d = std::getenv("CAYLERIAN_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return std::filesystem::path(d) / "caylerian";
  if (const char* d = std::getenv("HOME"); d && *d) return std::filesystem::path(d) / ".cache" / "caylerian";
  return std::filesystem::temp_directory_path() / "caylerian";
}

#ifdef CAYLERIAN_HAVE_CURL
namespace {
std::size_t append(char* data, std::size_t size, std::size_t count, void* out) {
  static_cast<std::string*>(out)->append(data, size * count);
  return size * count;
}
}  // namespace
#endif

std::filesystem::path fetch_bfile(const std::string& id, const std::filesystem::path& dir) {
  const std::filesystem::path target = dir / bfile_name(id);
  if (std::filesystem::exists(target)) return target;
#ifdef CAYLERIAN_HAVE_CURL
  const std::string url = "https://oeis.org/" + id + "/" + bfile_name(id);
  std::string body;
  CURL* curl = curl_easy_init();
  if (!curl) throw FetchError("curl initialisation failed");
  curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, append);
  curl_easy_setopt(curl, CURLOPT_WRITEDATA, &body);
  curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl, CURLOPT_TIMEOUT, 30L);
  const CURLcode rc = curl_easy_perform(curl);
  long status = 0;
  curl_easy_getinfo(curl, CURLINFO_RESPONSE_CODE, &status);
  curl_easy_cleanup(curl);
  if (rc != CURLE_OK) throw FetchError("fetching " + url + ": " + curl_easy_strerror(rc));
  if (status != 200) throw FetchError("fetching " + url + ": HTTP " + std::to_string(status));
  // validate before caching so a bad download is never reused
  std::istringstream check(body);
  parse_bfile(check, id);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::filesystem::path partial = target.string() + ".part";
  {
    std::ofstream out(partial, std::ios::binary);
    if (!(out << body)) throw FetchError("cannot write cache file " + partial.string());
  }
  std::filesystem::rename(partial, target);
  return target;
#else
  throw FetchError("built without libcurl; cannot fetch " + id);
#endif
}

}  // namespace caylerian
