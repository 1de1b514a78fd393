#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "torlat/isometry.hpp"
#include "torlat/lattice.hpp"
#include "torlat/wedge.hpp"

using namespace torlat;
using torlat::test::Rng;

namespace {

const IntMatrix& companion5() {
  static const IntMatrix g{{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1},
                           {0, 0, 1, -1}};
  return g;
}

}  // namespace

TEST_CASE("wedge pairing invariants") {
  const IntMatrix& g6 = wedge_gram();
  CHECK(g6.is_symmetric());
  CHECK(det(g6) == -1);
  CHECK(wedge_lattice().is_even());
  CHECK(wedge_lattice().signature() ==
        std::pair<std::size_t, std::size_t>{3, 3});
  Lattice uuu = direct_sum(direct_sum(lattice_U(), lattice_U()), lattice_U());
  CHECK(isometry_search(wedge_lattice(), uuu, 1).has_value());
}

TEST_CASE("wedge square on pinned matrices") {
  CHECK(wedge_square_matrix(IntMatrix::identity(4)) == IntMatrix::identity(6));
  CHECK(wedge_square_matrix(-IntMatrix::identity(4)) ==
        IntMatrix::identity(6));

  H2Action a = wedge_square(companion5());
  CHECK(a.order_h1 == 5);
  CHECK(a.order_h2 == 5);
  CHECK(det(a.phi) == 1);

  IntMatrix not_auto{{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK_THROWS_AS(wedge_square(not_auto), std::invalid_argument);
  CHECK_THROWS_AS(wedge_square_matrix(IntMatrix::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("wedge square is functorial and isometric") {
  Rng rng(21);
  const IntMatrix& g6 = wedge_gram();
  for (int iter = 0; iter < 200; ++iter) {
    IntMatrix a = torlat::test::random_unimodular(rng, 4);
    IntMatrix b = torlat::test::random_unimodular(rng, 4);
    CHECK(wedge_square_matrix(a * b) ==
          wedge_square_matrix(a) * wedge_square_matrix(b));
    IntMatrix phi = wedge_square_matrix(a);
    CHECK(phi.transpose() * g6 * phi == det(a) * g6);
    Int d3 = det(a) * det(a) * det(a);
    CHECK(det(phi) == d3);
  }
}

TEST_CASE("order computation") {
  CHECK(order_of(IntMatrix::identity(4)) == 1);
  CHECK(order_of(-IntMatrix::identity(4)) == 2);
  CHECK(order_of(companion5()) == 5);
  IntMatrix z{{-1, -1}, {1, 0}};
  CHECK(order_of(z) == 3);
  IntMatrix shear{{1, 1}, {0, 1}};
  CHECK_THROWS_AS(order_of(shear), std::domain_error);
  CHECK_THROWS_AS(order_of(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("h2 order on pinned matrices") {
  CHECK(h2_order(-IntMatrix::identity(4)) == 1);
  IntMatrix b4{{0, -1}, {1, 0}};
  CHECK(h2_order(IntMatrix::block_diag(b4, b4)) == 2);
  CHECK(h2_order(companion5()) == 5);
}

TEST_CASE("invariant and coinvariant lattices") {
  Sublattice full = invariant_lattice(wedge_square(IntMatrix::identity(4)));
  CHECK(full.lattice.rank() == 6);
  CHECK((full.lattice.gram == wedge_gram() ||
         genus_fingerprint(full.lattice) ==
             genus_fingerprint(wedge_lattice())));
  CHECK(coinvariant_lattice(wedge_square(IntMatrix::identity(4))).rank() == 0);

  IntMatrix invol{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
  Sublattice t = invariant_lattice(wedge_square(invol));
  CHECK(t.lattice.rank() == 2);
  CHECK(genus_fingerprint(t.lattice) == genus_fingerprint(lattice_U()));

  Sublattice t5 = invariant_lattice(wedge_square(companion5()));
  CHECK(t5.lattice.rank() == 2);
  CHECK(genus_fingerprint(t5.lattice) == genus_fingerprint(lattice_H5()));
  CHECK(isometry_search(t5.lattice, lattice_H5()).has_value());

  // det -1 sources are rejected: they negate the wedge pairing.
  IntMatrix reflect{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
  CHECK_THROWS_AS(invariant_lattice(wedge_square(reflect)),
                  std::invalid_argument);
}

TEST_CASE("invariant plus coinvariant fills the wedge lattice") {
  Rng rng(22);
  int done = 0;
  while (done < 200) {
    // Random finite-order automorphism: conjugate a pinned representative.
    IntMatrix reps[] = {
        IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}},
        IntMatrix::block_diag(IntMatrix{{-1, -1}, {1, 0}},
                              IntMatrix{{-1, -1}, {1, 0}}),
        IntMatrix::block_diag(IntMatrix{{0, -1}, {1, 0}},
                              IntMatrix{{0, -1}, {1, 0}}),
        companion5()};
    IntMatrix p = torlat::test::random_special_unimodular(rng, 4);
    RatMatrix pinv = RatMatrix(p).inverse();
    IntMatrix pinv_z(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        REQUIRE(pinv(i, j).get_den() == 1);
        pinv_z(i, j) = pinv(i, j).get_num();
      }
    IntMatrix g = p * reps[done % 4] * pinv_z;
    H2Action a = wedge_square(g);
    Sublattice t = invariant_lattice(a);
    Lattice s = coinvariant_lattice(a);
    CHECK(t.lattice.rank() + s.rank() == 6);
    CHECK(discriminant(t.lattice).invariant_factors ==
          discriminant(s).invariant_factors);
    ++done;
  }
}

TEST_CASE("fixed point counts") {
  CHECK(fixed_point_count(companion5()) == 5);
  CHECK(fixed_point_count(-companion5()) == 1);
  IntMatrix symp3{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, -1, 0}, {0, 1, 0, -1}};
  CHECK(fixed_point_count(symp3) == 9);
  IntMatrix symp4{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  CHECK(fixed_point_count(symp4) == 4);
  CHECK(fixed_point_count(-IntMatrix::identity(4)) == 16);

  IntMatrix invol{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
  CHECK_FALSE(has_finite_fixed_locus(invol));
  CHECK(has_finite_fixed_locus(companion5()));
  CHECK_THROWS_AS(fixed_point_count(invol), std::domain_error);
}
