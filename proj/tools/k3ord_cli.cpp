// Command-line front end: runs scenario files and the golden corpus.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "k3ord/linalg.hpp"
#include "k3ord/scenario.hpp"

namespace sc = k3ord::scenario;

namespace {

struct Options {
  std::string format = "text";
  std::string case_glob = "*";
  bool timing = false;
};

void print_text(const sc::Report& r) {
  std::string verdict(sc::to_string(r.verdict));
  for (auto& c : verdict) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::cout << verdict << " " << r.id;
  if (!r.kind.empty()) std::cout << " (" << r.kind << ")";
  if (r.timing_ms) std::cout << " " << *r.timing_ms << " ms";
  std::cout << "\n";
  for (auto it = r.computed.begin(); it != r.computed.end(); ++it) std::cout << "  " << it.key() << ": " << it.value().dump() << "\n";
  for (const auto& a : r.assumptions) std::cout << "  assume: " << a << "\n";
  for (const auto& d : r.diff)
    std::cout << "  diff " << d.path << ": expected " << d.expected.dump() << ", got " << d.actual.dump() << "\n";
  if (r.error) std::cout << "  error " << r.error->code << ": " << r.error->message << "\n";
}

int emit(const std::vector<sc::Report>& reports, const Options& opt, bool as_list) {
  if (opt.format == "json") {
    if (!as_list && reports.size() == 1) {
      std::cout << sc::to_json(reports.front()).dump(2) << "\n";
    } else {
      sc::Json all = sc::Json::array();
      for (const auto& r : reports) all.push_back(sc::to_json(r));
      std::cout << all.dump(2) << "\n";
    }
  } else if (as_list) {
    std::size_t pass = 0;
    for (const auto& r : reports) {
      if (r.verdict == sc::Verdict::Pass) {
        ++pass;
        std::cout << "PASS " << r.id << "\n";
      } else {
        print_text(r);
      }
    }
    std::cout << pass << "/" << reports.size() << " checks passed\n";
  } else {
    for (const auto& r : reports) print_text(r);
  }
  return sc::exit_code(reports);
}

// Runs a scenario and rejects it when its kind differs from what the subcommand handles.
sc::Report run_kind(const std::string& path, const std::string& kind, const Options& opt) {
  sc::Report r = sc::run_scenario(path, opt.timing);
  if (!r.error && r.kind != kind) {
    r.verdict = sc::Verdict::Error;
    r.diff.clear();
    r.error = sc::ReportError{"SchemaError", "scenario kind '" + r.kind + "' given to the " + kind + " command"};
  }
  return r;
}

int run_signature(const std::string& file, const std::string& inline_gram, const Options& opt) {
  sc::Report r;
  r.id = file.empty() ? "inline" : file;
  r.kind = "signature";
  try {
    sc::Json j;
    if (!inline_gram.empty()) {
      j = sc::Json::parse(inline_gram, nullptr, false);
    } else {
      std::ifstream in(file);
      if (!in) throw k3ord::Error(k3ord::ErrorCode::ParseError, "cannot open " + file);
      j = sc::Json::parse(in, nullptr, false);
    }
    if (j.is_discarded()) throw k3ord::Error(k3ord::ErrorCode::ParseError, "malformed JSON");
    // Accept a bare matrix, {"gram": ...}, or a scenario whose payload carries one.
    if (j.is_object() && j.contains("payload")) j = j["payload"];
    if (j.is_object() && j.contains("gram")) j = j["gram"];
    if (j.is_object() && j.contains("source_gram")) j = j["source_gram"];
    k3ord::IntMatrix g = sc::decode_int_matrix(j, "gram");
    auto s = k3ord::signature(g);
    r.computed = sc::Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
    if (g.is_square()) r.computed["det"] = k3ord::det(g).get_str();
    r.verdict = sc::Verdict::Pass;
  } catch (const k3ord::Error& e) {
    r.verdict = sc::Verdict::Error;
    r.error = sc::ReportError{std::string(k3ord::to_string(e.code())), e.what()};
  }
  return emit({r}, opt, false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice, cohomology and order computations for K3 double covers"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--case", opt.case_glob, "Case-name glob for corpus runs");
  app.add_flag("--timing", opt.timing, "Add wall-clock timing to reports");

  int status = 0;
  std::string path;

  auto* sig = app.add_subcommand("signature", "Signature of a Gram matrix (file or --gram)");
  std::string sig_file, sig_inline;
  sig->add_option("file", sig_file, "JSON file holding a matrix or a scenario");
  sig->add_option("--gram", sig_inline, "Matrix as JSON rows");
  sig->callback([&] { status = run_signature(sig_file, sig_inline, opt); });

  const std::vector<std::pair<std::string, std::string>> direct = {
      {"embed-check", "embedding-check"}, {"isometry", "isometry-extend"}, {"h1", "h1"},
      {"quotient-pic", "quotient-pic"},   {"ample", "ample-cert"},
  };
  for (const auto& [name, kind] : direct) {
    auto* sub = app.add_subcommand(name, "Runs one " + kind + " scenario");
    sub->add_option("scenario", path, "Scenario file or check directory")->required();
    sub->callback([&, kind = kind] { status = emit({run_kind(path, kind, opt)}, opt, false); });
  }

  const std::vector<std::tuple<std::string, std::string, std::string>> nested = {
      {"order", "classify", "order-classify"}, {"fibration", "h1", "fibration-h1"}, {"twist", "check", "twist-check"}};
  for (const auto& [group, action, kind] : nested) {
    auto* g = app.add_subcommand(group, "Commands for " + group + " scenarios");
    g->require_subcommand(1);
    auto* sub = g->add_subcommand(action, "Runs one " + kind + " scenario");
    sub->add_option("scenario", path, "Scenario file or check directory")->required();
    sub->callback([&, kind = kind] { status = emit({run_kind(path, kind, opt)}, opt, false); });
  }

  auto* corpus = app.add_subcommand("corpus", "Golden corpus");
  corpus->require_subcommand(1);
  auto* run = corpus->add_subcommand("run", "Run every matching corpus case");
  std::string corpus_dir = K3ORD_CORPUS_DIR;
  run->add_option("--corpus", corpus_dir, "Corpus root directory");
  run->callback([&] {
    try {
      status = emit(sc::run_corpus(corpus_dir, opt.case_glob, opt.timing), opt, true);
    } catch (const k3ord::Error& e) {
      std::cerr << "error " << k3ord::to_string(e.code()) << ": " << e.what() << "\n";
      status = 2;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  return status;
}
