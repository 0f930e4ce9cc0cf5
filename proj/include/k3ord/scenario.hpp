#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3ord/fibrations.hpp"
#include "k3ord/matrix.hpp"

namespace k3ord::scenario {

// Key order is preserved so emitted reports are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "k3ord/1";

// Scenario kinds understood by run_scenario.
inline const std::vector<std::string>& kinds() {
  static const std::vector<std::string> k = {"embedding-check", "isometry-extend", "h1",
                                             "quotient-pic",    "ample-cert",      "order-classify",
                                             "fibration-h1",    "twist-check"};
  return k;
}

// --- exact value encoding: integers as decimal strings, rationals as {num, den} ---

Json encode(const Integer& x);
Json encode(const Rational& q);
Json encode(const IntVector& v);
Json encode(const RatVector& v);
Json encode(const IntMatrix& m);
Json encode(const RatMatrix& m);

// Decoders throw SchemaError with `where` in the message when the shape is wrong.
Integer decode_integer(const Json& j, const std::string& where);
Rational decode_rational(const Json& j, const std::string& where);
IntVector decode_int_vector(const Json& j, const std::string& where);
RatVector decode_rat_vector(const Json& j, const std::string& where);
IntMatrix decode_int_matrix(const Json& j, const std::string& where);
GroupElement decode_element(const Json& j, const std::string& where);
Json encode(const GroupElement& x);

// --- reports ---

enum class Verdict { Pass, Fail, Error };
std::string_view to_string(Verdict v);

struct DiffEntry {
  std::string path;  // JSON pointer into `computed`
  Json expected;
  Json actual;
  friend bool operator==(const DiffEntry&, const DiffEntry&) = default;
};

struct ReportError {
  std::string code;
  std::string message;
  friend bool operator==(const ReportError&, const ReportError&) = default;
};

struct Report {
  std::string id;
  std::string kind;
  Verdict verdict = Verdict::Error;
  Json computed = Json::object();
  std::vector<std::string> assumptions;
  std::vector<DiffEntry> diff;
  std::optional<ReportError> error;
  std::optional<double> timing_ms;  // only filled on request; breaks byte-stability
  friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);

// Evaluates one scenario document. `expected` holds the optional expected block:
// {"computed": {...}} compares a subset of the output, {"error": "Code"} expects failure.
Report evaluate(const Json& scenario, const std::optional<Json>& expected, const std::string& id);

// `path` is a scenario file or a directory holding scenario.json; a sibling expected.json is
// used when present. ParseError / SchemaError surface as an Error verdict.
Report run_scenario(const std::filesystem::path& path, bool timing = false);

// Runs every check below the corpus root whose case directory matches `case_glob`
// (fnmatch syntax), in sorted order. Throws MissingCorpus when `root` is absent.
std::vector<Report> run_corpus(const std::filesystem::path& root, const std::string& case_glob = "*",
                               bool timing = false);

// Number of case directories matched by `case_glob`.
std::size_t count_cases(const std::filesystem::path& root, const std::string& case_glob);

// Exit status for a batch: 0 when every report passes, 2 if any errored, else 1.
int exit_code(const std::vector<Report>& reports);

// Recursive comparison of `expected` against `actual`: keys absent from `expected` are ignored.
std::vector<DiffEntry> diff(const Json& expected, const Json& actual, const std::string& path = "");

}  // namespace k3ord::scenario
