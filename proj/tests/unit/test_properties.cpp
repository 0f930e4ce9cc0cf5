#include <doctest.h>

#include "support.hpp"

using namespace k3ord::testing;

namespace {

void check_suite(const SuiteOutcome& s, std::size_t expected_trials = 0) {
  INFO(s.name << ": " << s.first_failure);
  if (expected_trials) CHECK(s.trials == expected_trials);
  CHECK(s.trials > 0);
  CHECK(s.failures == 0);
}

}  // namespace

TEST_CASE("property: Smith form on 500 random matrices") { check_suite(snf_suite(500), 500); }
TEST_CASE("property: signature congruence invariance") { check_suite(signature_suite(200), 200); }
TEST_CASE("property: H^1 under change of basis") { check_suite(h1_conjugation_suite(100), 100); }
TEST_CASE("property: extension basis independence") { check_suite(extension_basis_suite(50), 50); }
TEST_CASE("property: exhaustive small H^1") { check_suite(h1_exhaustive_suite()); }
TEST_CASE("property: h0 grid") { check_suite(h0_grid_suite(), 45); }

TEST_CASE("the H^1 oracle is stable under enlarging its search box") {
  using M = std::vector<std::vector<long>>;
  const std::vector<std::pair<M, unsigned>> samples = {
      {{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, 3},
      {{{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, 2},
      {{{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, 4},
      {{{0, -1, 0}, {1, 0, 0}, {0, 0, -1}}, 4},
      {{{1, 2, 0}, {0, -1, 0}, {0, 0, 1}}, 2},
  };
  for (const auto& [sigma, n] : samples) CHECK(h1_torsion_counts(sigma, n, 4) == h1_torsion_counts(sigma, n, 8));
}
