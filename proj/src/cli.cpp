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

#include "caylerian/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>

#include "caylerian/burge.hpp"
#include "caylerian/identities.hpp"
#include "caylerian/lomat.hpp"
#include "caylerian/oeis.hpp"
#include "caylerian/verify.hpp"

namespace caylerian {

namespace {

using Json = nlohmann::ordered_json;

constexpr long kEnumBound = 7;
constexpr long kFormulaBound = 12;
constexpr long kVerifyEnumN = 5;
constexpr long kVerifyEnumM = 3;

/// Invalid parameters: reported on the error stream with exit status 2.
struct InvalidParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integers that fit a JSON number are emitted as numbers, larger ones as strings.
Json big(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json poly_json(const IntPoly& p) {
  Json a = Json::array();
  for (int k = 0; k <= p.degree(); ++k) a.push_back(big(p.coefficient(static_cast<std::size_t>(k))));
  return a;
}

Json bipoly_json(const BiPoly& p) {
  Json a = Json::array();
  for (const auto& [deg, c] : p.terms()) a.push_back(Json::array({deg.first, deg.second, big(c)}));
  return a;
}

std::size_t checked(const char* name, long v, long bound, bool unsafe) {
  if (v < 0) throw InvalidParams(std::string("--") + name + " must be nonnegative (got " + std::to_string(v) + ")");
  if (!unsafe && v > bound)
    throw InvalidParams(std::string("--") + name + "=" + std::to_string(v) + " exceeds the default bound " +
                        std::to_string(bound) + "; pass --unsafe-bounds to override");
  return static_cast<std::size_t>(v);
}

std::optional<AscentSetSpec> parse_set(const std::string& text, std::size_t n) {
  if (text.empty()) return std::nullopt;
  std::vector<std::size_t> set;
  if (text != "-") {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
        throw InvalidParams("--set must be a comma-separated list of positive integers (got '" + text + "')");
      set.push_back(std::stoul(item));
    }
  }
  try {
    return AscentSetSpec(n, std::move(set));
  } catch (const std::invalid_argument& e) {
    throw InvalidParams(e.what());
  }
}

struct Emitter {
  std::string format;
  std::ostream& out;

  void record(const std::string& object, const Json& params, const std::string& method, const Json& value,
              const std::string& text, const std::function<void()>& csv) const {
    if (format == "json") {
      Json j;
      j["object"] = object;
      j["params"] = params;
      j["method"] = method;
      j["value"] = value;
      out << j.dump(2) << '\n';
    } else if (format == "csv") {
      csv();
    } else {
      out << text << '\n';
    }
  }
};

// --- enumerate ----------------------------------------------------------------

struct EnumerateArgs {
  std::string kind;
  long n = -1;
  long rows = -1;
  bool binary = false;
  std::string set;
  std::string format = "text";
  bool unsafe = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const bool needs_rows = a.kind == "genmat" || a.kind == "signed";
  const std::size_t n = checked("n", a.n, kEnumBound, a.unsafe);
  std::size_t m = 0;
  if (needs_rows) {
    if (a.rows == -1) throw InvalidParams("enumerate " + a.kind + " requires --rows");
    m = checked("rows", a.rows, kEnumBound, a.unsafe);
  } else if (a.rows != -1) {
    throw InvalidParams("--rows applies only to genmat and signed");
  }
  if (a.binary && (a.kind == "cayley" || a.kind == "ballot")) throw InvalidParams("--binary does not apply to " + a.kind);
  const auto spec = parse_set(a.set, n);
  if (spec && a.kind != "mat" && a.kind != "signed") throw InvalidParams("--set applies only to mat and signed");

  std::vector<std::string> items;
  if (a.kind == "cayley") {
    for (const auto& w : enumerate_cayley(n)) items.push_back(w.to_string());
  } else if (a.kind == "ballot") {
    for (const auto& b : enumerate_ballots(n)) items.push_back(b.to_string());
  } else if (a.kind == "burge") {
    for (const auto& b : enumerate_burge(n, a.binary)) items.push_back(b.to_string());
  } else if (a.kind == "mat") {
    for (const auto& x : enumerate_mat(n, a.binary, spec)) items.push_back(x.to_string());
  } else if (a.kind == "genmat") {
    for (const auto& x : enumerate_genmat(m, n, a.binary)) items.push_back(x.to_string());
  } else {
    for (const auto& x : enumerate_signed(m, n, spec, a.binary)) items.push_back(x.to_string());
  }

  Json params;
  if (needs_rows) params["rows"] = m;
  params["n"] = n;
  if (a.binary) params["binary"] = true;
  if (spec) params["set"] = spec->set();
  if (a.format == "json") {
    Json j;
    j["object"] = a.kind;
    j["params"] = params;
    j["method"] = "enumerate";
    j["count"] = items.size();
    j["value"] = items;
    out << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << "index,value\n";
    for (std::size_t i = 0; i < items.size(); ++i) out << i + 1 << ",\"" << items[i] << "\"\n";
  } else {
    for (const auto& s : items) out << s << '\n';
  }
  return kExitOk;
}

// --- count --------------------------------------------------------------------

struct CountArgs {
  std::string object;
  long n = -1;
  long rows = -1;
  bool binary = false;
  bool strict = false;
  std::string set;
  std::string method;
  std::string format = "text";
  bool unsafe = false;
};

int cmd_count(const CountArgs& a, const Emitter& emit) {
  const std::string& obj = a.object;
  std::string method = a.method;
  if (method.empty()) {
    if (obj == "cayley" || obj == "ballot") method = "fubini";
    else if (obj == "genmat") method = "compositions";
    else if (obj == "beta" || obj == "lambda") method = "inclexcl";
    else if (obj == "alpha") method = "multinomial";
    else if (obj == "descent-class") method = "determinant";
    else method = "stirling";
  }
  const bool enumerative = method == "enumerate";
  const std::size_t n = checked("n", a.n, enumerative ? kEnumBound : kFormulaBound, a.unsafe);
  const auto need_set = [&]() {
    auto spec = parse_set(a.set.empty() ? "-" : a.set, n);
    if (n == 0) throw InvalidParams(obj + " requires --n >= 1");
    return *spec;
  };
  Json params;
  BigInt value;

  const auto bad_method = [&]() { return InvalidParams("method '" + method + "' does not apply to " + obj); };
  if (obj == "cayley" || obj == "ballot") {
    params["n"] = n;
    if (method == "fubini") value = fubini(n);
    else if (method == "enumerate")
      value = static_cast<unsigned long>(obj == "cayley" ? enumerate_cayley(n).size() : enumerate_ballots(n).size());
    else throw bad_method();
  } else if (obj == "mat" || obj == "burge") {
    params["n"] = n;
    params["binary"] = a.binary;
    if (method == "stirling") value = count_mat(n, a.binary, CountMethod::Stirling);
    else if (method == "enumerate") value = count_mat(n, a.binary, CountMethod::Enumerate);
    else if (method == "double-sum") value = count_mat(n, a.binary, CountMethod::DoubleSum);
    else throw bad_method();
  } else if (obj == "genmat") {
    if (a.rows == -1) throw InvalidParams("count genmat requires --rows");
    const std::size_t m = checked("rows", a.rows, enumerative ? kEnumBound : kFormulaBound, a.unsafe);
    params["rows"] = m;
    params["n"] = n;
    params["binary"] = a.binary;
    CountMethod cm;
    try {
      cm = parse_count_method(method);
    } catch (const std::invalid_argument&) {
      throw bad_method();
    }
    if (cm == CountMethod::DoubleSum) throw bad_method();
    value = count_genmat(m, n, a.binary, cm);
  } else if (obj == "beta" || obj == "lambda") {
    const AscentSetSpec spec = need_set();
    params["n"] = n;
    params["set"] = spec.set();
    params["strict"] = a.strict;
    const AscentMode mode = obj == "beta" ? AscentMode::Subset : AscentMode::Equal;
    if (method == "inclexcl") value = obj == "beta" ? beta_formula(spec, a.strict) : lambda_inclexcl(spec, a.strict);
    else if (method == "enumerate") value = beta_brute(spec, a.strict, mode);
    else throw bad_method();
  } else if (obj == "alpha" || obj == "descent-class") {
    const AscentSetSpec spec = need_set();
    params["n"] = n;
    params["set"] = spec.set();
    if (obj == "alpha" && method == "multinomial") value = alpha_count(spec);
    else if (obj == "descent-class" && method == "determinant") {
      value = beta_perm_determinant(spec);
    } else if (method == "enumerate") value = obj == "alpha" ? alpha_brute(spec) : beta_perm_brute(spec);
    else throw bad_method();
  } else {
    throw InvalidParams("unknown object '" + obj + "'");
  }

  emit.record(obj, params, method, big(value), value.get_str(), [&]() {
    std::string header, row;
    for (const auto& [k, v] : params.items()) {
      header += k + ",";
      row += (v.is_array() ? "\"" + v.dump() + "\"" : v.dump()) + ",";
    }
    emit.out << header << "method,value\n" << row << method << "," << value.get_str() << '\n';
  });
  return kExitOk;
}

// --- poly ---------------------------------------------------------------------

struct PolyArgs {
  std::string object;
  long n = -1;
  bool strict = false;
  long terms = 8;
  std::string method = "formula";
  std::string format = "text";
  bool unsafe = false;
};

int cmd_poly(const PolyArgs& a, const Emitter& emit) {
  const bool enumerative = a.method == "enumerate";
  if (!enumerative && a.method != "formula") throw InvalidParams("method must be formula or enumerate");
  const std::size_t n = checked("n", a.n, enumerative ? kEnumBound : kFormulaBound, a.unsafe);
  Json params;
  params["n"] = n;
  params["strict"] = a.strict;
  if (a.object == "caylerian") {
    const IntPoly p = enumerative ? caylerian_brute(n, a.strict) : caylerian_formula(n, a.strict);
    emit.record(a.object, params, a.method, poly_json(p), p.to_string(), [&]() {
      emit.out << "power,coefficient\n";
      for (int k = 0; k <= p.degree(); ++k) emit.out << k << ',' << p.coefficient(static_cast<std::size_t>(k)) << '\n';
    });
  } else if (a.object == "two-sided") {
    const BiPoly p = enumerative ? two_sided_brute(n, a.strict) : two_sided_formula(n, a.strict);
    emit.record(a.object, params, a.method, bipoly_json(p), p.to_string(), [&]() {
      emit.out << "deg_s,deg_t,coefficient\n";
      for (const auto& [deg, c] : p.terms()) emit.out << deg.first << ',' << deg.second << ',' << c << '\n';
    });
  } else if (a.object == "carlitz") {
    if (enumerative) throw InvalidParams("carlitz series are computed by formula only");
    const std::size_t k = checked("terms", a.terms, 64, a.unsafe);
    params["terms"] = k;
    const auto series = carlitz_series(n, a.strict, k);
    Json value = Json::array();
    std::string text = "[";
    for (std::size_t i = 0; i < series.size(); ++i) {
      value.push_back(big(series[i]));
      text += (i ? ", " : "") + series[i].get_str();
    }
    emit.record(a.object, params, a.method, value, text + "]", [&]() {
      emit.out << "power,coefficient\n";
      for (std::size_t i = 0; i < series.size(); ++i) emit.out << i + 1 << ',' << series[i] << '\n';
    });
  } else {
    throw InvalidParams("unknown polynomial '" + a.object + "'");
  }
  return kExitOk;
}

// --- verify -------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  long max_n = -1;
  long max_m = -1;
  std::string report = "text";
  bool unsafe = false;
};

Json check_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["params"] = c.params;
  j["status"] = to_string(c.status);
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (c.witness) j["witness"] = {{"params", c.witness->params}, {"expected", c.witness->expected}, {"actual", c.witness->actual}};
  return j;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto& names = suite_names();
  if (a.suite != "all" && std::find(names.begin(), names.end(), a.suite) == names.end())
    throw InvalidParams("unknown suite '" + a.suite + "'");
  SuiteBounds b;
  if (a.max_n != -1) {
    b.formula_n = checked("max-n", a.max_n, kFormulaBound, a.unsafe);
    b.enum_n = a.unsafe ? b.formula_n : std::min<std::size_t>(b.formula_n, kVerifyEnumN);
  }
  if (a.max_m != -1) {
    b.formula_m = checked("max-m", a.max_m, kFormulaBound, a.unsafe);
    b.enum_m = a.unsafe ? b.formula_m : std::min<std::size_t>(b.formula_m, kVerifyEnumM);
  }
  const VerificationReport report = run_suite(a.suite, b);
  std::size_t passed = 0, failed = 0, unconverged = 0;
  for (const auto& c : report.checks) {
    if (c.status == CheckStatus::Pass) ++passed;
    else if (c.status == CheckStatus::Fail) ++failed;
    else ++unconverged;
  }
  const int code = failed ? kExitMismatch : unconverged ? kExitUnconverged : kExitOk;
  const std::string status = failed ? "fail" : unconverged ? "unconverged" : "pass";
  if (a.report == "json") {
    Json j;
    j["suite"] = a.suite;
    j["params"] = {{"formula_n", b.formula_n}, {"formula_m", b.formula_m}, {"enum_n", b.enum_n}, {"enum_m", b.enum_m}};
    j["status"] = status;
    j["passed"] = passed;
    j["failed"] = failed;
    j["unconverged"] = unconverged;
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back(check_json(c));
    j["checks"] = checks;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      std::string tag = to_string(c.status);
      std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
      out << tag << "  " << c.name << " [" << c.params << "]";
      if (!c.detail.empty()) out << " " << c.detail;
      out << '\n';
      if (c.witness)
        out << "    witness " << c.witness->params << ": expected " << c.witness->expected << ", got "
            << c.witness->actual << '\n';
    }
    out << status << ": " << passed << " passed, " << failed << " failed, " << unconverged << " unconverged\n";
  }
  return code;
}

// --- oeis ---------------------------------------------------------------------

struct OeisArgs {
  std::string id;
  std::string b_file;
  bool fetch = false;
  long max_n = -1;
  std::string method = "stirling";
  std::string format = "text";
  bool unsafe = false;
};

int cmd_oeis(const OeisArgs& a, std::ostream& out) {
  const auto& ids = supported_sequences();
  if (std::find(ids.begin(), ids.end(), a.id) == ids.end()) throw InvalidParams("unsupported sequence '" + a.id + "'");
  if (a.fetch && !a.b_file.empty()) throw InvalidParams("--b-file and --fetch are mutually exclusive");
  CountMethod method;
  if (a.method == "stirling") method = CountMethod::Stirling;
  else if (a.method == "enumerate") method = CountMethod::Enumerate;
  else throw InvalidParams("method must be stirling or enumerate");
  const long default_n = a.id == "A366173" ? 7 : 10;
  const std::size_t max_n = checked("max-n", a.max_n == -1 ? default_n : a.max_n,
                                    method == CountMethod::Enumerate ? kEnumBound : kFormulaBound, a.unsafe);

  std::filesystem::path path;
  std::string source;
  try {
    if (a.fetch) {
      path = fetch_bfile(a.id, cache_dir());
      source = "fetch";
    } else if (!a.b_file.empty()) {
      path = a.b_file;
      source = "b-file";
    } else {
      path = bundled_dir() / bfile_name(a.id);
      source = "bundled";
    }
  } catch (const FetchError& e) {
    throw InvalidParams(e.what());
  }
  BFile file;
  try {
    file = load_bfile(path, a.id);
  } catch (const BFileError& e) {
    throw InvalidParams(e.what());
  }
  const OeisComparison cmp = compare_terms(file, engine_terms(a.id, max_n, method));
  const std::string status = cmp.first_mismatch ? "mismatch" : cmp.compared ? "pass" : "empty";
  if (a.format == "json") {
    Json j;
    j["object"] = "oeis";
    j["params"] = {{"id", a.id}, {"max_n", max_n}, {"source", source}, {"path", path.string()}};
    j["method"] = a.method;
    j["status"] = status;
    j["compared"] = cmp.compared;
    if (cmp.first_mismatch)
      j["mismatch"] = {{"index", *cmp.first_mismatch}, {"expected", big(cmp.expected)}, {"actual", big(cmp.actual)}};
    out << j.dump(2) << '\n';
  } else if (cmp.first_mismatch) {
    out << a.id << ": mismatch at index " << *cmp.first_mismatch << ": b-file " << cmp.expected << ", engine "
        << cmp.actual << '\n';
  } else {
    out << a.id << ": " << status << ", " << cmp.compared << " terms agree (max_n=" << max_n << ", " << source
        << " " << path.string() << ")\n";
  }
  return cmp.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and identity checks for Caylerian polynomials and Burge matrices", "caylerian"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  const auto formats = CLI::IsMember({"text", "json", "csv"});

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "List every structure of a given size");
  en->add_option("kind", ea.kind, "cayley|ballot|burge|mat|genmat|signed")
      ->required()
      ->check(CLI::IsMember({"cayley", "ballot", "burge", "mat", "genmat", "signed"}));
  en->add_option("--n,--size", ea.n, "Size n")->required();
  en->add_option("--rows", ea.rows, "Row count m (genmat, signed)");
  en->add_flag("--binary", ea.binary, "Binary variant (entries of size <= 1)");
  en->add_option("--set", ea.set, "Row-sum set S as 1,3 (mat, signed)");
  en->add_option("--format", ea.format, "text|json|csv")->check(formats);
  en->add_flag("--unsafe-bounds", ea.unsafe, "Allow sizes beyond the default bounds");

  CountArgs ca;
  auto* co = app.add_subcommand("count", "Count structures by a chosen method");
  co->add_option("object", ca.object, "cayley|ballot|burge|mat|genmat|beta|lambda|alpha|descent-class")
      ->required()
      ->check(CLI::IsMember({"cayley", "ballot", "burge", "mat", "genmat", "beta", "lambda", "alpha", "descent-class"}));
  co->add_option("--n,--size", ca.n, "Size n")->required();
  co->add_option("--rows", ca.rows, "Row count m (genmat)");
  co->add_flag("--binary", ca.binary, "Binary variant");
  co->add_flag("--strict", ca.strict, "Strict ascents (beta, lambda)");
  co->add_option("--set", ca.set, "Subset S of [n-1] as 1,3");
  co->add_option("--method", ca.method,
                 "compositions|stirling|inclexcl|ogf-coefficient|enumerate|double-sum|fubini|multinomial|determinant");
  co->add_option("--format", ca.format, "text|json|csv")->check(formats);
  co->add_flag("--unsafe-bounds", ca.unsafe, "Allow sizes beyond the default bounds");

  PolyArgs pa;
  auto* po = app.add_subcommand("poly", "Print a generating polynomial as ascending coefficients");
  po->add_option("object", pa.object, "caylerian|two-sided|carlitz")
      ->required()
      ->check(CLI::IsMember({"caylerian", "two-sided", "carlitz"}));
  po->add_option("--n,--size", pa.n, "Size n")->required();
  po->add_flag("--strict", pa.strict, "Strict (binary) variant");
  po->add_option("--terms", pa.terms, "Series terms t^1..t^K (carlitz)");
  po->add_option("--method", pa.method, "formula|enumerate");
  po->add_option("--format", pa.format, "text|json|csv")->check(formats);
  po->add_flag("--unsafe-bounds", pa.unsafe, "Allow sizes beyond the default bounds");

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "Run verification suites");
  ve->add_option("suite", va.suite, "all|kernel|bijections|involutions|formulas|pairing|gf");
  ve->add_option("--max-n", va.max_n, "Largest n (exhaustive checks are capped at 5 unless --unsafe-bounds)");
  ve->add_option("--max-m", va.max_m, "Largest m (exhaustive checks are capped at 3 unless --unsafe-bounds)");
  ve->add_option("--report,--format", va.report, "text|json")->check(CLI::IsMember({"text", "json"}));
  ve->add_flag("--unsafe-bounds", va.unsafe, "Lift the enumeration caps");

  OeisArgs oa;
  auto* oe = app.add_subcommand("oeis", "Compare engine values with an OEIS b-file");
  oe->add_option("id", oa.id, "A000670|A120733|A101370|A366173")->required();
  oe->add_option("--b-file", oa.b_file, "Read this b-file instead of the bundled fixture");
  oe->add_flag("--fetch", oa.fetch, "Download from oeis.org into $CAYLERIAN_CACHE_DIR (cached)");
  oe->add_option("--max-n", oa.max_n, "Compare terms up to this n (triangle: rows)");
  oe->add_option("--method", oa.method, "stirling|enumerate (matrix counts)");
  oe->add_option("--format", oa.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  oe->add_flag("--unsafe-bounds", oa.unsafe, "Allow sizes beyond the default bounds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (en->parsed()) return cmd_enumerate(ea, out);
    if (co->parsed()) return cmd_count(ca, Emitter{ca.format, out});
    if (po->parsed()) return cmd_poly(pa, Emitter{pa.format, out});
    if (ve->parsed()) return cmd_verify(va, out);
    if (oe->parsed()) return cmd_oeis(oa, out);
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const UnconvergedError& e) {
    err << "unconverged: " << e.what() << '\n';
    return kExitUnconverged;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace caylerian
