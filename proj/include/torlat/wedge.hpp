#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "torlat/lattice.hpp"
#include "torlat/linalg.hpp"
#include "torlat/smith.hpp"

namespace torlat {

// Fixed basis of Lambda^2 Z^4: e1^e2, e1^e3, e1^e4, e2^e3, e2^e4, e3^e4.
inline const std::array<std::pair<int, int>, 6>& wedge_pairs() {
  static const std::array<std::pair<int, int>, 6> pairs = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  return pairs;
}

// Wedge pairing <ei^ej, ek^el> = sign of (i j k l) when the indices are all
// distinct: antidiag(1,-1,1,1,-1,1). Even, det -1, signature (3,3),
// isometric to U+U+U.
inline const IntMatrix& wedge_gram() {
  static const IntMatrix g = [] {
    IntMatrix m(6, 6);
    m(0, 5) = 1;
    m(5, 0) = 1;
    m(1, 4) = -1;
    m(4, 1) = -1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return m;
  }();
  return g;
}

inline Lattice wedge_lattice() { return Lattice(wedge_gram()); }

// Lambda^2 g: entries are the 2x2 minors of g in the fixed basis order.
inline IntMatrix wedge_square_matrix(const IntMatrix& g) {
  if (g.rows() != 4 || g.cols() != 4)
    throw std::invalid_argument("wedge_square: matrix must be 4x4");
  const auto& pairs = wedge_pairs();
  IntMatrix phi(6, 6);
  for (std::size_t r = 0; r < 6; ++r) {
    auto [i, j] = pairs[r];
    for (std::size_t c = 0; c < 6; ++c) {
      auto [k, l] = pairs[c];
      phi(r, c) = g(i, k) * g(j, l) - g(i, l) * g(j, k);
    }
  }
  return phi;
}

// Smallest k >= 1 with m^k = I; torus automorphisms never exceed 12.
inline int order_of(const IntMatrix& m, int max_order = 12) {
  if (!m.is_square()) throw std::invalid_argument("order_of: not square");
  IntMatrix id = IntMatrix::identity(m.rows());
  IntMatrix power = m;
  for (int k = 1; k <= max_order; ++k) {
    if (power == id) return k;
    power = power * m;
  }
  throw std::domain_error("order_of: infinite or unsupported order");
}

struct H2Action {
  IntMatrix source_g;  // in GL_4(Z)
  IntMatrix phi;       // Lambda^2 source_g
  int order_h1 = 0;
  int order_h2 = 0;
};

inline H2Action wedge_square(const IntMatrix& g) {
  Int d = det(g);
  if (d != 1 && d != -1)
    throw std::invalid_argument(
        "wedge_square: matrix is not a lattice automorphism (|det| != 1)");
  H2Action a;
  a.source_g = g;
  a.phi = wedge_square_matrix(g);
  a.order_h1 = order_of(g);
  a.order_h2 = order_of(a.phi);
  return a;
}

inline int h2_order(const IntMatrix& g) { return wedge_square(g).order_h2; }

// Saturated fixed sublattice of phi inside the wedge model, with the
// restricted gram matrix.
inline Sublattice invariant_lattice(const H2Action& a) {
  if (det(a.source_g) != 1)
    throw std::invalid_argument(
        "invariant_lattice: source must have determinant 1");
  IntMatrix basis = integer_kernel(a.phi - IntMatrix::identity(6));
  Lattice restricted(basis.transpose() * wedge_gram() * basis);
  return {std::move(basis), std::move(restricted)};
}

inline Lattice coinvariant_lattice(const H2Action& a) {
  Sublattice t = invariant_lattice(a);
  if (t.basis.cols() == 0) return wedge_lattice();
  return orthogonal_complement(t.basis, wedge_lattice()).lattice;
}

inline bool has_finite_fixed_locus(const IntMatrix& g) {
  return det(IntMatrix::identity(g.rows()) - g) != 0;
}

// |Lambda / (1-g)Lambda| = |det(I - g)|: the number of fixed points of the
// induced torus automorphism when the fixed locus is finite.
inline Int fixed_point_count(const IntMatrix& g) {
  Int d = det(IntMatrix::identity(g.rows()) - g);
  if (d == 0)
    throw std::domain_error("fixed_point_count: positive-dimensional locus");
  return d < 0 ? Int(-d) : d;
}

}  // namespace torlat
