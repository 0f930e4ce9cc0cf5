#include <doctest.h>

#include "k3ord/divisors.hpp"
#include "k3ord/reference_data.hpp"

using namespace k3ord;

TEST_CASE("genus from adjunction on a K3") {
  Lattice h = build_H();
  CHECK(genus(h, IntVector{1, 1}) == 2);   // square 2
  CHECK(genus(h, IntVector{1, 0}) == 1);   // square 0
  CHECK(genus(Lattice(IntMatrix{{-2}}), IntVector{1}) == 0);
  CHECK_THROWS_AS(genus(Lattice(IntMatrix{{1}}), IntVector{1}), Error);
  CHECK(is_nodal_class(Lattice(IntMatrix{{-2}}), IntVector{1}));
  CHECK_FALSE(is_nodal_class(h, IntVector{1, 1}));
}

TEST_CASE("ample certificates record every pairing") {
  for (std::size_t n = 3; n <= 18; ++n) {
    CAPTURE(n);
    auto c = reference::sextic_case(n);
    AmpleCertificate cert = nakai_certificate(c.pic, c.ample, c.curve_generators);
    CHECK(cert.pass);
    CHECK(cert.self_int == 2);
    REQUIRE(cert.pair_checks.size() == n);
    for (const auto& pc : cert.pair_checks) {
      CHECK(pc.s_dot_gen == 1);
      CHECK(pc.s_dot_residual == 1);
      CHECK(pc.residual_square == -2);
    }
  }
  auto quad = reference::quadric_case();
  AmpleCertificate q = nakai_certificate(quad.pic, quad.ample, quad.curve_generators);
  CHECK(q.pass);
  CHECK(q.pair_checks[0].s_dot_gen == 2);
  for (std::size_t i = 1; i < q.pair_checks.size(); ++i) CHECK(q.pair_checks[i].s_dot_gen == 1);
  auto f2 = reference::hirzebruch2_case();
  AmpleCertificate f = nakai_certificate(f2.pic, f2.ample, f2.curve_generators);
  CHECK(f.pass);
  for (const auto& pc : f.pair_checks) CHECK(pc.s_dot_gen == 1);
}

TEST_CASE("failing certificates explain themselves") {
  auto c = reference::sextic_case(3);
  AmpleCertificate bad = nakai_certificate(c.pic, IntVector{1, 0, 0}, c.curve_generators);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.reason.empty());
  CHECK_THROWS_AS(nakai_certificate(c.pic, c.ample, {unit_vector(3, 0)}), Error);
}

TEST_CASE("effectivity dichotomy") {
  auto c = reference::sextic_case(3);
  AmpleCertificate cert = nakai_certificate(c.pic, c.ample, c.curve_generators);
  CHECK(effectivity(c.pic, IntVector{0, 0, 1}, cert) == Effectivity::Effective);
  CHECK(effectivity(c.pic, IntVector{-1, -1, 1}, cert) == Effectivity::AntiEffective);
  CHECK(effectivity(c.pic, IntVector{0, 0, 0}, cert) == Effectivity::Zero);
  CHECK(to_string(Effectivity::AntiEffective) == "AntiEffective");
  AmpleCertificate failed = nakai_certificate(c.pic, IntVector{1, 0, 0}, c.curve_generators);
  CHECK_THROWS_AS(effectivity(c.pic, IntVector{0, 0, 1}, failed), Error);
}
