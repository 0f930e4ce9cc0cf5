#include <doctest.h>

#include "k3ord/isometry.hpp"
#include "k3ord/reference_data.hpp"
#include "support.hpp"

using namespace k3ord;

namespace {

IntMatrix corpus_phi(const std::string& c) {
  auto j = testing::load_json(testing::corpus_dir() / c / "isometry" / "expected.json");
  return testing::json_matrix(j["computed"]["phi"]);
}

}  // namespace

TEST_CASE("extensions reproduce the printed 22 x 22 matrices") {
  const Lattice k3 = build_K3();
  const std::pair<const char*, reference::CoverCase> cases[] = {
      {"sextic-n18", reference::sextic_case(18)},
      {"quadric", reference::quadric_case()},
      {"f2", reference::hirzebruch2_case()},
  };
  for (const auto& [dir, c] : cases) {
    CAPTURE(dir);
    ExtensionResult r = extend_by_minus_one(k3, Embedding{c.pic, k3, c.embedding}, c.action);
    REQUIRE(r.phi_integer.has_value());
    const IntMatrix& phi = *r.phi_integer;
    CHECK(phi == corpus_phi(dir));
    CHECK(phi.transpose() * k3.gram() * phi == k3.gram());
    CHECK(phi * phi == IntMatrix::identity(22));
    CHECK(r.integral);
    CHECK(r.orthogonal);
    CHECK(r.involutive);
  }
}

TEST_CASE("every sextic-family extension is integral and fixes the ample class") {
  const Lattice k3 = build_K3();
  for (std::size_t n = 3; n <= 18; ++n) {
    CAPTURE(n);
    auto c = reference::sextic_case(n);
    Embedding e{c.pic, k3, c.embedding};
    ExtensionResult r = extend_by_minus_one(k3, e, c.action);
    CHECK(r.integral);
    CHECK(r.involutive);
    CHECK(fixes_vector(r, c.ample, e));
  }
}

TEST_CASE("reflection-type extension on H + H is rational when v^2 does not divide 2 v.x") {
  const Lattice hh = direct_sum(build_H(), build_H());
  // v = (1, 2, 0, 0) has v^2 = 4 and pairs to 1 with the second basis vector.
  Embedding e{Lattice(IntMatrix{{4}}), hh, IntMatrix{{1}, {2}, {0}, {0}}};
  ExtensionResult r = extend_by_minus_one(hh, e, IntMatrix{{1}});
  CHECK_FALSE(r.integral);
  CHECK_FALSE(r.phi_integer.has_value());
  CHECK(r.orthogonal);
  CHECK(r.involutive);
  // phi(x) = -x + 2 (x.v)/(v.v) v checked entrywise.
  const IntVector v = {1, 2, 0, 0};
  for (std::size_t j = 0; j < 4; ++j) {
    const Rational c(Integer(2 * pair(hh, unit_vector(4, j), v)), Integer(4));
    for (std::size_t i = 0; i < 4; ++i) {
      Rational want = c * v[i] - (i == j ? 1 : 0);
      want.canonicalize();
      CHECK(r.phi(i, j) == want);
    }
  }
}

TEST_CASE("non-isometric actions are rejected") {
  const Lattice k3 = build_K3();
  auto c = reference::sextic_case(3);
  IntMatrix bad = IntMatrix::identity(3);
  bad(0, 1) = 1;
  CHECK_THROWS_AS(extend_by_minus_one(k3, Embedding{c.pic, k3, c.embedding}, bad), Error);
}
