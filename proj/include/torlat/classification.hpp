#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torlat/lattice.hpp"

namespace torlat {

// One line of the classification of invariant lattices of prime-order
// non-symplectic actions: rank r, family dimension, discriminant length a,
// Nikulin delta (p = 2 only) and the resolved lattice.
struct ClassificationRow {
  int p = 0;
  int r = 0;
  int dim = 0;
  int a = 0;
  std::optional<int> delta;
  std::string lattice_name;

  friend bool operator==(const ClassificationRow&,
                         const ClassificationRow&) = default;
};

// Existence of an even hyperbolic 2-elementary lattice with invariants
// (r, a, delta) [Nikulin].
inline bool nikulin_2_exists(int r, int a, int delta) {
  if (r < 1) throw std::invalid_argument("nikulin_2_exists: r must be >= 1");
  if (delta != 0 && delta != 1)
    throw std::invalid_argument("nikulin_2_exists: delta must be 0 or 1");
  auto mod = [](int x, int m) { return ((x % m) + m) % m; };
  if (a > r) return false;
  if (mod(r - a, 2) != 0) return false;
  if (delta == 0 && mod(r, 4) != 2) return false;
  if (a == 0 && delta != 0) return false;
  if (a <= 1 && mod(r, 8) != mod(2 + a, 8) && mod(r, 8) != mod(2 - a, 8))
    return false;
  if (a == 2 && mod(r, 8) == 6 && delta != 0) return false;
  if (delta == 0 && a == r && mod(r, 8) != 2) return false;
  return true;
}

// Existence of an even hyperbolic p-elementary lattice with invariants
// (r, a) for odd p [Rudakov-Shafarevich].
inline bool rs_p_exists(int r, int a, int p) {
  if (p == 2 || !detail::is_prime(Int(p)))
    throw std::invalid_argument("rs_p_exists: p must be an odd prime");
  auto mod = [](int x, int m) { return ((x % m) + m) % m; };
  if (a > r) return false;
  if (mod(r, 2) != 0) return false;
  if (mod(a, 2) == 0 && mod(r, 4) != 2) return false;
  if (mod(a, 2) == 1) {
    int target = (r / 2 - 1) % 2 == 0 ? 1 : 3;  // (-1)^(r/2-1) mod 4
    if (mod(p, 4) != target) return false;
  }
  if (mod(r, 8) != 2 && !(r > a && a > 0)) return false;
  return true;
}

// Square condition for a rank (p-1) lattice with an order-p action and
// discriminant p^a: d / p^(p-2) is a rational square iff a = p - 2 mod 2.
inline bool bcms_condition(int p, int a) {
  return ((a - (p - 2)) % 2 + 2) % 2 == 0;
}

// Dimension of the family of abelian surfaces realizing a rank-r invariant
// lattice: 4 - r for p = 2, (6-r)/(p-1) - 1 for p = 3, 5.
inline int family_dimension(int p, int r) {
  if (p == 2) {
    if (r < 0 || r > 4)
      throw std::invalid_argument("family_dimension: invalid rank");
    return 4 - r;
  }
  if (p == 3 || p == 5) {
    if ((6 - r) % (p - 1) != 0)
      throw std::invalid_argument("family_dimension: (p-1) must divide 6-r");
    int d = (6 - r) / (p - 1) - 1;
    if (d < 0) throw std::invalid_argument("family_dimension: invalid rank");
    return d;
  }
  throw std::invalid_argument("family_dimension: p must be 2, 3 or 5");
}

namespace detail {

struct NamedEntry {
  int p, r, a;
  std::optional<int> delta;
  const char* name;
};

inline const std::vector<NamedEntry>& table_names() {
  static const std::vector<NamedEntry> names = {
      {2, 2, 0, 0, "U"},          {2, 2, 2, 0, "U(2)"},
      {2, 2, 2, 1, "<2>+<-2>"},   {2, 4, 2, 1, "U+<-2>^2"},
      {3, 2, 0, std::nullopt, "U"},   {3, 2, 2, std::nullopt, "U(3)"},
      {3, 4, 1, std::nullopt, "U+A2(-1)"},
      {5, 2, 1, std::nullopt, "H_5"},
  };
  return names;
}

}  // namespace detail

// The unique lattice with the given table invariants, from a fixed lookup.
inline Lattice resolve_lattice(int p, int r, int a,
                               std::optional<int> delta = std::nullopt) {
  auto match = [&](const detail::NamedEntry& e) {
    return e.p == p && e.r == r && e.a == a && (p != 2 || e.delta == delta);
  };
  for (const auto& e : detail::table_names()) {
    if (!match(e)) continue;
    std::string name = e.name;
    if (name == "U") return lattice_U();
    if (name == "U(2)") return rescale(lattice_U(), 2);
    if (name == "U(3)") return rescale(lattice_U(), 3);
    if (name == "<2>+<-2>")
      return direct_sum(lattice_rank1(2), lattice_rank1(-2));
    if (name == "U+<-2>^2")
      return direct_sum(direct_sum(lattice_U(), lattice_rank1(-2)),
                        lattice_rank1(-2));
    if (name == "U+A2(-1)")
      return direct_sum(lattice_U(), rescale(lattice_A2(), -1));
    if (name == "H_5") return lattice_H5();
  }
  throw std::invalid_argument("resolve_lattice: invariants outside the table");
}

inline std::string table_lattice_name(int p, int r, int a,
                                      std::optional<int> delta) {
  for (const auto& e : detail::table_names())
    if (e.p == p && e.r == r && e.a == a && (p != 2 || e.delta == delta))
      return e.name;
  throw std::invalid_argument("table_lattice_name: invariants not in table");
}

// Re-derive the classification table for one prime: r even in {2, 4}
// (even by the monodromy corollary, bounded by the hyperbolic invariant
// part and the rank-2 positive period plane inside the coinvariant part),
// a <= min(r, 6-r) since A_T = A_S, existence by the p-elementary
// criteria, (p-1) | rank(S) for odd p, and the square condition when
// rank(S) = p - 1.
inline std::vector<ClassificationRow> enumerate_table(int p) {
  if (p != 2 && p != 3 && p != 5)
    throw std::invalid_argument("enumerate_table: p must be 2, 3 or 5");
  std::vector<ClassificationRow> rows;
  for (int r : {2, 4}) {
    int a_max = std::min(r, 6 - r);
    if (p != 2 && (6 - r) % (p - 1) != 0) continue;
    for (int a = 0; a <= a_max; ++a) {
      if (6 - r == p - 1 && !bcms_condition(p, a)) continue;
      if (p == 2) {
        for (int delta : {0, 1}) {
          if (!nikulin_2_exists(r, a, delta)) continue;
          rows.push_back({p, r, family_dimension(p, r), a, delta,
                          table_lattice_name(p, r, a, delta)});
        }
      } else {
        if (!rs_p_exists(r, a, p)) continue;
        rows.push_back({p, r, family_dimension(p, r), a, std::nullopt,
                        table_lattice_name(p, r, a, std::nullopt)});
      }
    }
  }
  return rows;
}

}  // namespace torlat
