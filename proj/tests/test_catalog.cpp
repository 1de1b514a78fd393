#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "torlat/catalog.hpp"
#include "torlat/classification.hpp"
#include "torlat/cyclotomic.hpp"
#include "torlat/isometry.hpp"
#include "torlat/lattice.hpp"
#include "torlat/wedge.hpp"

using namespace torlat;

TEST_CASE("catalog size and lookup") {
  CHECK(catalog().size() == 11);
  CHECK(find_example("p5_H5").p == 5);
  CHECK_THROWS_AS(find_example("nosuch"), std::invalid_argument);
}

TEST_CASE("every catalog example verifies") {
  for (const auto& rec : catalog()) {
    VerificationReport report = verify_example(rec.name);
    INFO(rec.name);
    for (const auto& c : report.checks) {
      INFO(c.check << ": expected " << c.expected << ", computed "
                   << c.computed);
      CHECK(c.pass);
    }
    CHECK(report.overall);
  }
}

TEST_CASE("order five example in detail") {
  const ExampleRecord& rec = find_example("p5_H5");
  H2Action action = wedge_square(rec.g_h1);
  CHECK(action.order_h1 == 5);
  CHECK(action.order_h2 == 5);

  Sublattice t = invariant_lattice(action);
  CHECK(t.lattice.rank() == 2);
  Int d = t.lattice.det();
  CHECK((d == 5 || d == -5));
  CHECK(genus_fingerprint(t.lattice) == genus_fingerprint(lattice_H5()));
  auto w = isometry_search(t.lattice, lattice_H5());
  REQUIRE(w.has_value());
  CHECK(w->transpose() * t.lattice.gram * *w == lattice_H5().gram);

  Lattice s = coinvariant_lattice(action);
  CHECK(s.rank() == 4);
  CHECK(discriminant(s).invariant_factors == std::vector<Int>{5});
}

TEST_CASE("symplectic examples pin their coinvariant lattices") {
  {
    const ExampleRecord& rec = find_example("symp_order3");
    Lattice s = coinvariant_lattice(wedge_square(rec.g_h1));
    CHECK(s.rank() == 2);
    CHECK(s.signature() == std::pair<std::size_t, std::size_t>{0, 2});
    CHECK(genus_fingerprint(s) ==
          genus_fingerprint(rescale(lattice_A2(), -1)));
  }
  {
    const ExampleRecord& rec = find_example("symp_order4");
    Lattice s = coinvariant_lattice(wedge_square(rec.g_h1));
    CHECK(s.rank() == 2);
    CHECK(genus_fingerprint(s) ==
          genus_fingerprint(
              direct_sum(lattice_rank1(-2), lattice_rank1(-2))));
  }
}

TEST_CASE("quotient transcendental lattices of symplectic quotients") {
  const ExampleRecord& o3 = find_example("symp_order3");
  Lattice q3 = quotient_transcendental(
      invariant_lattice(wedge_square(o3.g_h1)).lattice, 3);
  CHECK(genus_fingerprint(q3) ==
        genus_fingerprint(rescale(direct_sum(lattice_U(), lattice_A2()), 3)));

  const ExampleRecord& o4 = find_example("symp_order4");
  Lattice q4 = quotient_transcendental(
      invariant_lattice(wedge_square(o4.g_h1)).lattice, 4);
  CHECK(genus_fingerprint(q4) ==
        genus_fingerprint(rescale(
            direct_sum(direct_sum(lattice_U(), lattice_rank1(2)),
                       lattice_rank1(2)),
            4)));

  CHECK(quotient_transcendental(lattice_U(), 1) == lattice_U());
  CHECK_THROWS_AS(quotient_transcendental(lattice_U(), 0),
                  std::invalid_argument);
}

TEST_CASE("non-symplectic examples cover the classification table") {
  std::set<std::string> realized;
  for (const auto& rec : catalog()) {
    if (rec.symplectic) continue;
    Sublattice t = invariant_lattice(wedge_square(rec.g_h1));
    for (int p : {2, 3, 5}) {
      for (const auto& row : enumerate_table(p)) {
        Lattice table_l = resolve_lattice(row.p, row.r, row.a, row.delta);
        if (rec.p == row.p &&
            genus_fingerprint(t.lattice) == genus_fingerprint(table_l)) {
          realized.insert(std::to_string(row.p) + "/" + row.lattice_name);
          CHECK(rec.family_dim == row.dim);
        }
      }
    }
  }
  // Every table row is realized by exactly the eight non-symplectic records.
  std::set<std::string> expected;
  for (int p : {2, 3, 5})
    for (const auto& row : enumerate_table(p))
      expected.insert(std::to_string(row.p) + "/" + row.lattice_name);
  CHECK(realized == expected);
  CHECK(expected.size() == 8);
}

TEST_CASE("H^1 characteristic polynomials factor into cyclotomics") {
  for (const auto& rec : catalog()) {
    auto factors = factor_into_cyclotomics(char_poly(rec.g_h1));
    REQUIRE(factors.has_value());
    int degree = 0;
    for (const auto& [n, mult] : *factors)
      degree += mult * poly_degree(cyclotomic(n));
    CHECK(degree == 4);
    // The order on H^1 is the lcm of the cyclotomic indices.
    long lcm = 1;
    for (const auto& [n, mult] : *factors) lcm = std::lcm(lcm, long(n));
    CHECK(lcm == rec.order_h1);
  }
}

TEST_CASE("negating the source fixes the wedge square") {
  for (const auto& rec : catalog()) {
    CHECK(wedge_square_matrix(-rec.g_h1) == wedge_square_matrix(rec.g_h1));
  }
}

TEST_CASE("invariant and coinvariant glue along the discriminant") {
  for (const auto& rec : catalog()) {
    H2Action action = wedge_square(rec.g_h1);
    Sublattice t = invariant_lattice(action);
    Lattice s = coinvariant_lattice(action);
    CHECK(t.lattice.rank() % 2 == 0);
    CHECK(t.lattice.rank() + s.rank() == 6);
    CHECK(discriminant(t.lattice).invariant_factors ==
          discriminant(s).invariant_factors);
    CHECK(t.lattice.is_even());
    CHECK((s.rank() == 0 || s.is_even()));
  }
}
