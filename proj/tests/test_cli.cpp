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

#include <gtest/gtest.h>

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "caylerian/cli.hpp"

using namespace caylerian;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, EnumerateCayley) {
  const CliResult r = run({"enumerate", "cayley", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "11\n12\n21\n");
}

TEST(Cli, EnumerateGenmat) {
  const CliResult r = run({"enumerate", "genmat", "--rows", "2", "--size", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 7u);
}

TEST(Cli, EnumerateFormats) {
  const CliResult json = run({"enumerate", "ballot", "--n", "2", "--format", "json"});
  ASSERT_EQ(json.code, 0);
  const auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["object"], "ballot");
  EXPECT_EQ(j["method"], "enumerate");
  EXPECT_EQ(j["count"], 3);
  EXPECT_EQ(j["value"][0], "{1}{2}");
  EXPECT_EQ(j["value"][2], "{2}{1}");
  const CliResult csv = run({"enumerate", "mat", "--n", "2", "--binary", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(lines(csv.out), 5u);
  EXPECT_EQ(csv.out.substr(0, 12), "index,value\n");
}

TEST(Cli, EnumerateSignedWithSet) {
  const CliResult r = run({"enumerate", "signed", "--rows", "1", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 6u);
  EXPECT_EQ(run({"enumerate", "mat", "--n", "3", "--set", "1"}).code, 0);
  EXPECT_EQ(run({"enumerate", "mat", "--n", "3", "--set", "3"}).code, 2);
  EXPECT_EQ(run({"enumerate", "cayley", "--n", "3", "--set", "1"}).code, 2);
}

TEST(Cli, InvalidParameters) {
  const CliResult neg = run({"enumerate", "cayley", "--n", "-1"});
  EXPECT_EQ(neg.code, 2);
  EXPECT_FALSE(neg.err.empty());
  EXPECT_TRUE(neg.out.empty());
  EXPECT_EQ(run({"enumerate", "cayley", "--n", "8"}).code, 2);
  EXPECT_EQ(run({"enumerate", "widgets", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"enumerate", "genmat", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"count", "mat", "--n", "3", "--method", "compositions"}).code, 2);
  EXPECT_EQ(run({"count", "mat", "--n", "abc"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
}

TEST(Cli, UnsafeBounds) {
  EXPECT_EQ(run({"count", "cayley", "--n", "13"}).code, 2);
  const CliResult r = run({"count", "cayley", "--n", "13", "--unsafe-bounds"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "526858348381\n");
}

TEST(Cli, Help) {
  const CliResult r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("enumerate"), std::string::npos);
}

TEST(Cli, CountMat) {
  EXPECT_EQ(run({"count", "mat", "--n", "3"}).out, "33\n");
  EXPECT_EQ(run({"count", "mat", "--n", "3", "--method", "enumerate"}).out, "33\n");
  EXPECT_EQ(run({"count", "mat", "--n", "3", "--method", "double-sum"}).out, "33\n");
  EXPECT_EQ(run({"count", "burge", "--n", "3", "--binary"}).out, "24\n");
}

TEST(Cli, CountMethodsNeverDisagree) {
  for (const char* method : {"compositions", "stirling", "inclexcl", "ogf-coefficient", "enumerate"}) {
    const CliResult r = run({"count", "genmat", "--rows", "3", "--n", "4", "--method", method});
    EXPECT_EQ(r.code, 0) << method;
    EXPECT_EQ(r.out, run({"count", "genmat", "--rows", "3", "--n", "4"}).out) << method;
  }
}

TEST(Cli, CountJsonSchema) {
  const auto j = nlohmann::json::parse(run({"count", "genmat", "--rows", "2", "--n", "2", "--format", "json"}).out);
  EXPECT_EQ(j["object"], "genmat");
  EXPECT_EQ(j["params"]["rows"], 2);
  EXPECT_EQ(j["params"]["n"], 2);
  EXPECT_EQ(j["method"], "compositions");
  EXPECT_EQ(j["value"], 7);
}

TEST(Cli, CountBetaCsv) {
  const CliResult r = run({"count", "beta", "--n", "4", "--set", "1,3", "--strict", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,set,strict,method,value");
}

TEST(Cli, Poly) {
  EXPECT_EQ(run({"poly", "caylerian", "--n", "3"}).out, "[1, 8, 4]\n");
  EXPECT_EQ(run({"poly", "caylerian", "--n", "3", "--strict", "--method", "enumerate"}).out, "[4, 8, 1]\n");
  EXPECT_EQ(run({"poly", "two-sided", "--n", "2", "--strict"}).out, "{(1,2):1,(2,1):1,(2,2):2}\n");
  const auto j = nlohmann::json::parse(run({"poly", "two-sided", "--n", "2", "--strict", "--format", "json"}).out);
  EXPECT_EQ(j["value"], nlohmann::json::parse("[[1,2,1],[2,1,1],[2,2,2]]"));
  const auto c = nlohmann::json::parse(run({"poly", "caylerian", "--n", "3", "--format", "json"}).out);
  EXPECT_EQ(c["value"], nlohmann::json::parse("[1,8,4]"));
  EXPECT_EQ(run({"poly", "carlitz", "--n", "2", "--terms", "3"}).out, "[1, 5, 12]\n");
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"enumerate", "burge", "--n", "3", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> verify{"verify", "formulas", "--max-n", "3", "--max-m", "2", "--report", "json"};
  EXPECT_EQ(run(verify).out, run(verify).out);
}

TEST(Cli, VerifySuites) {
  EXPECT_EQ(run({"verify", "involutions", "--max-n", "4", "--max-m", "2"}).code, 0);
  EXPECT_EQ(run({"verify", "all", "--max-n", "0"}).code, 0);
  const CliResult p = run({"verify", "pairing", "--max-n", "6", "--max-m", "8"});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("swapped"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"verify", "kernel", "--max-n", "4", "--report", "json"}).out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["failed"], 0);
  EXPECT_FALSE(j["checks"].empty());
}

TEST(Cli, OeisBundled) {
  EXPECT_EQ(run({"oeis", "A000670", "--max-n", "7"}).code, 0);
  EXPECT_EQ(run({"oeis", "A120733", "--max-n", "6", "--method", "enumerate"}).code, 0);
  EXPECT_EQ(run({"oeis", "A101370"}).code, 0);
  EXPECT_EQ(run({"oeis", "A366173", "--max-n", "7"}).code, 0);
  EXPECT_EQ(run({"oeis", "A999999"}).code, 2);
}

TEST(Cli, OeisCustomFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "caylerian-cli-test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "bad.txt") << "# comment\n0 1\n1 one\n";
  std::ofstream(dir / "wrong.txt") << "0 1\n1 1\n2 3\n3 12\n";
  const CliResult bad = run({"oeis", "A000670", "--b-file", (dir / "bad.txt").string()});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 3"), std::string::npos);
  const CliResult wrong = run({"oeis", "A000670", "--b-file", (dir / "wrong.txt").string()});
  EXPECT_EQ(wrong.code, 1);
  EXPECT_NE(wrong.out.find("index 3"), std::string::npos);
  EXPECT_EQ(run({"oeis", "A000670", "--b-file", (dir / "missing.txt").string()}).code, 2);
  std::filesystem::remove_all(dir);
}
