#include <doctest.h>

#include <cmath>

#include "k3ord/embedding.hpp"
#include "k3ord/reference_data.hpp"
#include "support.hpp"

using namespace k3ord;

namespace {

nlohmann::ordered_json payload(const std::string& c, const std::string& check) {
  return testing::load_json(testing::corpus_dir() / c / check / "scenario.json")["payload"];
}

}  // namespace

// The built-in reference cases and the corpus files are transcribed separately; they must agree.
TEST_CASE("sextic Gram transcription checksum") {
  CHECK(reference::gram_checksum(reference::sextic_gram_full()) == reference::kSexticGramChecksum);
  CHECK(reference::sextic_gram(18) == reference::sextic_gram_full());
}

TEST_CASE("reference cases match the corpus scenarios") {
  std::vector<std::pair<std::string, reference::CoverCase>> cases;
  for (std::size_t n = 3; n <= 18; ++n) cases.emplace_back("sextic-n" + std::to_string(n), reference::sextic_case(n));
  cases.emplace_back("quadric", reference::quadric_case());
  cases.emplace_back("f2", reference::hirzebruch2_case());
  const Lattice k3 = build_K3();
  for (const auto& [dir, c] : cases) {
    CAPTURE(dir);
    auto p = payload(dir, "isometry");
    CHECK(testing::json_matrix(p["source_gram"]) == c.pic.gram());
    CHECK(testing::json_matrix(p["matrix"]) == c.embedding);
    CHECK(testing::json_matrix(p["action"]) == c.action);
    CHECK(testing::json_matrix(p["target"]["gram"]) == k3.gram());
    std::vector<std::string> labels;
    for (const auto& l : p["target"]["labels"]) labels.push_back(l.get<std::string>());
    CHECK(labels == k3.labels());
  }
}

TEST_CASE("completing labels give a basis") {
  const Lattice k3 = build_K3();
  for (const auto& c : {reference::sextic_case(18), reference::quadric_case(),
                        reference::hirzebruch2_case()}) {
    CAPTURE(c.name);
    IntMatrix extra(22, c.completing_labels.size());
    for (std::size_t i = 0; i < c.completing_labels.size(); ++i) extra(k3.index_of(c.completing_labels[i]), i) = 1;
    IntMatrix frame = hstack(c.embedding, extra);
    REQUIRE(frame.is_square());
    CHECK(abs(det(frame)) == 1);
    CHECK(std::abs(std::abs(testing::float_det(frame)) - 1.0) < 1e-6);
  }
}
