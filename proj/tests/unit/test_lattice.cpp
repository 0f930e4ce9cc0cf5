#include <doctest.h>

#include "k3ord/embedding.hpp"
#include "k3ord/reference_data.hpp"
#include "support.hpp"

using namespace k3ord;

TEST_CASE("E8 is even, unimodular and negative definite") {
  Lattice e8 = build_E8();
  CHECK(e8.rank() == 8);
  CHECK(is_even(e8));
  CHECK(testing::cofactor_det(e8.gram()) == 1);
  CHECK(signature(e8.gram()) == Signature{0, 8, 0});
}

TEST_CASE("K3 lattice has rank 22, signature (3,19), determinant -1") {
  Lattice k3 = build_K3();
  CHECK(k3.rank() == 22);
  CHECK(is_even(k3));
  CHECK(det(k3.gram()) == -1);
  CHECK(signature(k3.gram()) == Signature{3, 19, 0});
  auto oracle = testing::eigen_signature(k3.gram());
  CHECK(oracle.positive == 3);
  CHECK(oracle.negative == 19);
}

TEST_CASE("labelled K3 vectors") {
  Lattice k3 = build_K3();
  IntVector v = reference::k3_vector({{"mu1", 1}, {"mu2", 1}});
  CHECK(pair(k3, v, v) == 2);
  CHECK_THROWS_AS(k3.index_of("nonsense"), Error);
}

TEST_CASE("direct sums are block diagonal") {
  Lattice h = build_H();
  Lattice hh = direct_sum(h, h);
  CHECK(hh.rank() == 4);
  CHECK(hh.gram()(2, 3) == 1);
  CHECK(hh.gram()(0, 2) == 0);
}

TEST_CASE("primitivity: a doubled vector is not primitive") {
  Lattice h = build_H();
  Lattice src(IntMatrix{{4}});
  Embedding prim{src, h, IntMatrix{{1}, {2}}};
  Embedding doubled{Lattice(IntMatrix{{8}}), h, IntMatrix{{2}, {2}}};
  CHECK(check_isometric(prim));
  CHECK(is_primitive(prim));
  CHECK(extend_to_basis(prim).has_value());
  CHECK(check_isometric(doubled));
  CHECK_FALSE(is_primitive(doubled));
  CHECK_FALSE(extend_to_basis(doubled).has_value());
}

TEST_CASE("extension to a basis is certified by a unit determinant") {
  auto c = reference::sextic_case(5);
  Embedding e{c.pic, build_K3(), c.embedding};
  auto extra = extend_to_basis(e);
  REQUIRE(extra.has_value());
  CHECK(abs(det(hstack(e.matrix, *extra))) == 1);
}

TEST_CASE("orthogonal complement is orthogonal, of the right rank, and saturated") {
  Lattice k3 = build_K3();
  for (std::size_t n : {3u, 10u, 18u}) {
    auto c = reference::sextic_case(n);
    Embedding e{c.pic, k3, c.embedding};
    ComplementResult r = orthogonal_complement(e);
    const IntMatrix& t = r.complement.matrix;
    CHECK(t.cols() == 22 - n);
    CHECK((e.matrix.transpose() * k3.gram() * t).is_zero());
    CHECK(is_primitive(r.complement));
    // In a unimodular lattice, P + T has index |disc P| when P is primitive.
    CHECK(abs(r.pic_plus_t_det) == abs(det(c.pic.gram())));
  }
}

TEST_CASE("non-isometric embedding is detected") {
  Embedding e{Lattice(IntMatrix{{2}}), build_H(), IntMatrix{{1}, {0}}};
  CHECK_FALSE(check_isometric(e));
}
