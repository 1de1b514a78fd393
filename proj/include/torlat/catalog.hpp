#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torlat/classification.hpp"
#include "torlat/isometry.hpp"
#include "torlat/lattice.hpp"
#include "torlat/wedge.hpp"

namespace torlat {

// Transcendental lattice of the K3 resolution of the quotient by a
// symplectic automorphism of order n: the form is rescaled by n.
inline Lattice quotient_transcendental(const Lattice& t, int n) {
  if (n < 1)
    throw std::invalid_argument("quotient_transcendental: order must be >= 1");
  return rescale(t, n);
}

// Expected fixed-point count of one group element; nullopt marks a
// positive-dimensional fixed locus (det(I - g) = 0).
struct FixedLocusExpectation {
  std::string element;
  IntMatrix matrix;
  std::optional<Int> count;
};

struct ExampleRecord {
  std::string name;
  int p = 0;  // order of the action on the second cohomology
  int order_h1 = 0;
  IntMatrix g_h1;
  std::string group_type;
  bool symplectic = false;
  std::string expected_T_name;
  Lattice expected_T;
  std::optional<Lattice> expected_S;  // pinned for symplectic records
  std::vector<FixedLocusExpectation> fixed_loci;
  int family_dim = 0;
  bool check_family_dim = true;
};

namespace detail {

inline IntMatrix minus(const IntMatrix& m) { return -m; }

inline ExampleRecord make_record(std::string name, int p, int order_h1,
                                 IntMatrix g, std::string group_type,
                                 bool symplectic, std::string t_name,
                                 Lattice t, std::optional<Lattice> s,
                                 std::vector<FixedLocusExpectation> loci,
                                 int family_dim, bool check_dim) {
  ExampleRecord r;
  r.name = std::move(name);
  r.p = p;
  r.order_h1 = order_h1;
  r.g_h1 = std::move(g);
  r.group_type = std::move(group_type);
  r.symplectic = symplectic;
  r.expected_T_name = std::move(t_name);
  r.expected_T = std::move(t);
  r.expected_S = std::move(s);
  r.fixed_loci = std::move(loci);
  r.family_dim = family_dim;
  r.check_family_dim = check_dim;
  return r;
}

}  // namespace detail

// All Fujiki families with a prime-order action on second cohomology,
// with their H^1 matrices frozen in explicit period-lattice bases.
inline const std::vector<ExampleRecord>& catalog() {
  static const std::vector<ExampleRecord> records = [] {
    using detail::make_record;
    std::vector<ExampleRecord> recs;

    const IntMatrix order3_block{{-1, -1}, {1, 0}};   // zeta_3 on <1, zeta_6>
    const IntMatrix order4_block{{0, -1}, {1, 0}};    // i on <1, i>
    auto pos_dim = [](std::string label, IntMatrix m) {
      return FixedLocusExpectation{std::move(label), std::move(m),
                                   std::nullopt};
    };
    auto points = [](std::string label, IntMatrix m, long n) {
      return FixedLocusExpectation{std::move(label), std::move(m), Int(n)};
    };

    // (id, -id) on E x E', basis (l1, l2, m1, m2).
    {
      IntMatrix g{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
      recs.push_back(make_record(
          "p2_U", 2, 2, g, "Z/2 x Z/2", false, "U", lattice_U(), std::nullopt,
          {pos_dim("sigma", g), pos_dim("-sigma", -g)}, 2, true));
    }

    // Same involution on the quotient of E x E' by the half period
    // (l1 + m1)/2; basis (v, l2, m1, m2) with v = (l1 + m1)/2, so
    // sigma(v) = v - m1.
    {
      IntMatrix g{{1, 0, 0, 0}, {0, 1, 0, 0}, {-1, 0, -1, 0}, {0, 0, 0, -1}};
      recs.push_back(make_record(
          "p2_U2", 2, 2, g, "Z/2 x Z/2", false, "U(2)",
          rescale(lattice_U(), 2), std::nullopt,
          {pos_dim("sigma", g), pos_dim("-sigma", -g)}, 2, true));
    }

    // Quotient by two independent half periods (l1 + m1)/2 and
    // (l2 + m2)/2; basis (v1, v2, m1, m2).
    {
      IntMatrix g{{1, 0, 0, 0}, {0, 1, 0, 0}, {-1, 0, -1, 0}, {0, -1, 0, -1}};
      recs.push_back(make_record(
          "p2_2m2", 2, 2, g, "Z/2 x Z/2", false, "<2>+<-2>",
          direct_sum(lattice_rank1(2), lattice_rank1(-2)), std::nullopt,
          {pos_dim("sigma", g), pos_dim("-sigma", -g)}, 2, true));
    }

    // (i, i) on E_4 x E_4, basis (1, i) per factor. Order four on H^1,
    // order two on H^2.
    {
      IntMatrix g = IntMatrix::block_diag(order4_block, order4_block);
      recs.push_back(make_record(
          "p2_U4x4", 2, 4, g, "Z/4", false, "U+<-2>^2",
          direct_sum(direct_sum(lattice_U(), lattice_rank1(-2)),
                     lattice_rank1(-2)),
          std::nullopt, {points("sigma", g, 4), points("-sigma", -g, 4)}, 0,
          true));
    }

    // (id, zeta_3) on E x E_6, basis (l1, l2, 1, zeta_6).
    {
      IntMatrix g = IntMatrix::block_diag(IntMatrix::identity(2),
                                          order3_block);
      recs.push_back(make_record(
          "p3_U", 3, 3, g, "Z/2 x Z/3", false, "U", lattice_U(), std::nullopt,
          {pos_dim("sigma", g), points("-sigma", -g, 4)}, 1, true));
    }

    // Same automorphism on the quotient of E x E_6 by the third period
    // (l1 + m1 + m2)/3; basis (v, l2, m1, m2) with v = (l1 + m1 + m2)/3,
    // so sigma(v) = v - m1.
    {
      IntMatrix g{{1, 0, 0, 0}, {0, 1, 0, 0}, {-1, 0, -1, -1}, {0, 0, 1, 0}};
      recs.push_back(make_record(
          "p3_U3", 3, 3, g, "Z/2 x Z/3", false, "U(3)",
          rescale(lattice_U(), 3), std::nullopt,
          {pos_dim("sigma", g), points("-sigma", -g, 4)}, 1, true));
    }

    // (zeta_3, zeta_3) on E_6 x E_6.
    {
      IntMatrix g = IntMatrix::block_diag(order3_block, order3_block);
      recs.push_back(make_record(
          "p3_UA2", 3, 3, g, "Z/2 x Z/3", false, "U+A2(-1)",
          direct_sum(lattice_U(), rescale(lattice_A2(), -1)), std::nullopt,
          {points("sigma", g, 9), points("-sigma", -g, 1)}, 0, true));
    }

    // Multiplication by (zeta_5, zeta_5^2) on C^2 / <(1,1), (z,z^2),
    // (z^2,z^4), (z^3,z)>: the companion matrix of x^4+x^3+x^2+x+1.
    {
      IntMatrix g{{0, 0, 0, -1},
                  {1, 0, 0, -1},
                  {0, 1, 0, -1},
                  {0, 0, 1, -1}};
      recs.push_back(make_record(
          "p5_H5", 5, 5, g, "Z/2 x Z/5", false, "H_5", lattice_H5(),
          std::nullopt,
          {points("sigma", g, 5), points("sigma^2", g * g, 5),
           points("-sigma", -g, 1), points("-sigma^2", -(g * g), 1)},
          0, true));
    }

    // Symplectic order 3: multiplication by [[0,-1],[1,-1]] on
    // C^2 / <(1,0), (0,1), (x,y), (-y,x-y)>, basis ordered per coordinate
    // (l1, l3, l2, l4) so that the wedge orientation matches the fixed
    // convention. The matrix is the order-3 block tensored with I_2.
    {
      IntMatrix g{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, -1, 0}, {0, 1, 0, -1}};
      recs.push_back(make_record(
          "symp_order3", 3, 3, g, "Z/6", true, "U+A2",
          direct_sum(lattice_U(), lattice_A2()),
          rescale(lattice_A2(), -1), {points("sigma", g, 9)}, 2, false));
    }

    // The order-6 generator -sigma of the same group.
    {
      IntMatrix g3{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, -1, 0},
                   {0, 1, 0, -1}};
      IntMatrix g = -g3;
      recs.push_back(make_record(
          "symp_order6", 3, 6, g, "Z/6", true, "U+A2",
          direct_sum(lattice_U(), lattice_A2()),
          rescale(lattice_A2(), -1), {points("sigma", g, 1)}, 2, false));
    }

    // Symplectic order 4: multiplication by [[0,-1],[1,0]] on
    // C^2 / <(1,0), (0,1), (x,-y), (y,x)>, same per-coordinate basis order.
    {
      IntMatrix g{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
      recs.push_back(make_record(
          "symp_order4", 2, 4, g, "Z/4", true, "U+<2>^2",
          direct_sum(direct_sum(lattice_U(), lattice_rank1(2)),
                     lattice_rank1(2)),
          direct_sum(lattice_rank1(-2), lattice_rank1(-2)),
          {points("sigma", g, 4), points("-sigma", -g, 4)}, 2, false));
    }

    return recs;
  }();
  return records;
}

inline const ExampleRecord& find_example(const std::string& name) {
  for (const auto& r : catalog())
    if (r.name == name) return r;
  throw std::invalid_argument("unknown catalog example '" + name + "'");
}

struct CheckResult {
  std::string check;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string example;
  std::vector<CheckResult> checks;
  bool overall = true;

  void add(std::string check, std::string expected, std::string computed,
           bool pass) {
    overall = overall && pass;
    checks.push_back(
        {std::move(check), std::move(expected), std::move(computed), pass});
  }
};

inline VerificationReport verify_example(const std::string& name) {
  const ExampleRecord& rec = find_example(name);
  VerificationReport report;
  report.example = rec.name;

  H2Action action = wedge_square(rec.g_h1);
  report.add("order on H^1", std::to_string(rec.order_h1),
             std::to_string(action.order_h1),
             action.order_h1 == rec.order_h1);
  report.add("order on H^2", std::to_string(rec.p),
             std::to_string(action.order_h2), action.order_h2 == rec.p);

  Sublattice t = invariant_lattice(action);
  GenusFingerprint t_fp = genus_fingerprint(t.lattice);
  GenusFingerprint t_exp = genus_fingerprint(rec.expected_T);
  report.add("invariant lattice fingerprint (" + rec.expected_T_name + ")",
             t_exp.to_string(), t_fp.to_string(), t_fp == t_exp);
  bool witness = isometry_search(t.lattice, rec.expected_T).has_value();
  report.add("isometry witness to " + rec.expected_T_name, "found",
             witness ? "found" : "not found", witness);

  Lattice s = coinvariant_lattice(action);
  auto t_factors = discriminant(t.lattice).invariant_factors;
  auto s_factors = discriminant(s).invariant_factors;
  {
    std::ostringstream exp, got;
    for (const auto& f : t_factors) exp << f.get_str() << " ";
    for (const auto& f : s_factors) got << f.get_str() << " ";
    report.add("A_T = A_S (invariant factors)", exp.str(), got.str(),
               t_factors == s_factors);
  }
  if (rec.expected_S) {
    GenusFingerprint s_fp = genus_fingerprint(s);
    GenusFingerprint s_exp = genus_fingerprint(*rec.expected_S);
    report.add("coinvariant lattice fingerprint", s_exp.to_string(),
               s_fp.to_string(), s_fp == s_exp);
  }

  for (const auto& locus : rec.fixed_loci) {
    if (locus.count) {
      bool finite = has_finite_fixed_locus(locus.matrix);
      Int count = finite ? fixed_point_count(locus.matrix) : Int(0);
      report.add("fixed points of " + locus.element, locus.count->get_str(),
                 finite ? count.get_str() : "positive-dimensional",
                 finite && count == *locus.count);
    } else {
      bool finite = has_finite_fixed_locus(locus.matrix);
      report.add("fixed locus of " + locus.element, "positive-dimensional",
                 finite ? "finite" : "positive-dimensional", !finite);
    }
  }

  std::size_t t_rank = t.lattice.rank();
  report.add("invariant rank even", "even",
             t_rank % 2 == 0 ? "even" : "odd", t_rank % 2 == 0);

  if (rec.check_family_dim) {
    int dim = family_dimension(rec.p, static_cast<int>(t_rank));
    report.add("family dimension", std::to_string(rec.family_dim),
               std::to_string(dim), dim == rec.family_dim);
  }

  return report;
}

}  // namespace torlat
