#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torlat/int_matrix.hpp"
#include "torlat/linalg.hpp"
#include "torlat/smith.hpp"

namespace torlat {

// Non-degenerate integral symmetric bilinear form in a fixed basis.
struct Lattice {
  IntMatrix gram;

  Lattice() : gram(0, 0) {}

  explicit Lattice(IntMatrix g) : gram(std::move(g)) {
    if (!gram.is_symmetric())
      throw std::invalid_argument("Lattice: gram matrix not symmetric");
    if (torlat::det(gram) == 0)
      throw std::domain_error("Lattice: degenerate gram matrix");
  }

  std::size_t rank() const { return gram.rows(); }
  Int det() const { return torlat::det(gram); }

  bool is_even() const {
    for (std::size_t i = 0; i < gram.rows(); ++i)
      if (gram(i, i) % 2 != 0) return false;
    return true;
  }

  std::pair<std::size_t, std::size_t> signature() const {
    if (rank() == 0) return {0, 0};
    return congruent_diagonalize(gram);
  }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.gram == b.gram;
  }
};

inline Lattice lattice_U() { return Lattice(IntMatrix{{0, 1}, {1, 0}}); }
inline Lattice lattice_A2() { return Lattice(IntMatrix{{2, 1}, {1, 2}}); }
inline Lattice lattice_H5() { return Lattice(IntMatrix{{2, 1}, {1, -2}}); }

inline Lattice lattice_rank1(const Int& k) {
  if (k == 0) throw std::invalid_argument("rank1 lattice: k must be nonzero");
  IntMatrix g(1, 1);
  g(0, 0) = k;
  return Lattice(g);
}

// L(n): multiply the form by n.
inline Lattice rescale(const Lattice& l, const Int& n) {
  if (n == 0) throw std::invalid_argument("rescale: scale must be nonzero");
  return Lattice(n * l.gram);
}

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
  return Lattice(IntMatrix::block_diag(a.gram, b.gram));
}

// Named constructors shared with the CLI: U, A2, H5, rank1(k).
inline Lattice make_named(const std::string& name,
                          std::optional<Int> scale = std::nullopt) {
  Lattice l;
  if (name == "U")
    l = lattice_U();
  else if (name == "A2")
    l = lattice_A2();
  else if (name == "H5")
    l = lattice_H5();
  else if (name.rfind("rank1(", 0) == 0 && name.back() == ')')
    l = lattice_rank1(Int(name.substr(6, name.size() - 7)));
  else
    throw std::invalid_argument("make_named: unknown lattice name '" + name +
                                "'");
  if (scale) l = rescale(l, *scale);
  return l;
}

namespace detail {

// x mod m*Z reduced into [0, m).
inline Rat reduced_mod(const Rat& x, unsigned m) {
  Rat y = x / static_cast<int>(m);
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  return x - static_cast<int>(m) * Rat(f);
}

inline bool is_prime(const Int& p) {
  return p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

}  // namespace detail

// The discriminant group A_L = L*/L with the induced quadratic form on a
// generating set read off the Smith normal form of the gram matrix.
struct DiscriminantData {
  std::vector<Int> invariant_factors;  // orders > 1 of the cyclic factors
  std::size_t length_a = 0;
  std::vector<Rat> q_values;  // q(g_i) for each generator
  RatMatrix gen_pairings;     // <g_i, g_j> in Q, diagonal not yet reduced
  bool even = false;

  Int group_order() const {
    Int n = 1;
    for (const Int& d : invariant_factors) n *= d;
    return n;
  }
};

inline DiscriminantData discriminant(const Lattice& l) {
  DiscriminantData data;
  data.even = l.is_even();
  std::size_t n = l.rank();
  if (n == 0) return data;

  SmithDecomposition snf = smith_normal_form(l.gram);
  // U G V = D; A_L = Z^n / G Z^n with the class of column i of U^-1
  // generating a factor of order D[i]. Its dual representative is
  // G^-1 U^-1 e_i, so generator pairings are (U^-1)^T G^-1 U^-1.
  RatMatrix w = RatMatrix(snf.left).inverse();
  RatMatrix pair_full = w.transpose() * RatMatrix(l.gram).inverse() * w;

  std::vector<std::size_t> gen_idx;
  for (std::size_t i = 0; i < n; ++i) {
    Int d = snf.diag[i];
    if (d > 1) {
      data.invariant_factors.push_back(d);
      gen_idx.push_back(i);
    }
  }
  data.length_a = gen_idx.size();
  data.gen_pairings = RatMatrix(data.length_a, data.length_a);
  unsigned modulus = data.even ? 2 : 1;
  for (std::size_t i = 0; i < gen_idx.size(); ++i) {
    for (std::size_t j = 0; j < gen_idx.size(); ++j)
      data.gen_pairings(i, j) = pair_full(gen_idx[i], gen_idx[j]);
    data.q_values.push_back(
        detail::reduced_mod(data.gen_pairings(i, i), modulus));
  }
  return data;
}

inline std::pair<bool, std::size_t> is_p_elementary(const Lattice& l,
                                                    const Int& p) {
  if (!detail::is_prime(p))
    throw std::invalid_argument("is_p_elementary: p is not prime");
  DiscriminantData d = discriminant(l);
  for (const Int& f : d.invariant_factors)
    if (f != p) return {false, 0};
  return {true, d.length_a};
}

namespace detail {

// q over every element of A_L, reduced mod 2Z (even) or mod Z (odd).
inline std::vector<Rat> all_q_values(const DiscriminantData& d,
                                     std::size_t cap = 65536) {
  Int order = d.group_order();
  if (order > static_cast<unsigned long>(cap))
    throw std::runtime_error("discriminant group too large to enumerate");
  unsigned modulus = d.even ? 2 : 1;
  std::size_t a = d.length_a;
  std::vector<unsigned long> c(a, 0);
  std::vector<Rat> values;
  values.reserve(order.get_ui());
  for (;;) {
    Rat q = 0;
    for (std::size_t i = 0; i < a; ++i) {
      if (c[i] == 0) continue;
      for (std::size_t j = 0; j < a; ++j) {
        if (c[j] == 0) continue;
        q += static_cast<long>(c[i]) * static_cast<long>(c[j]) *
             d.gen_pairings(i, j);
      }
    }
    values.push_back(reduced_mod(q, modulus));
    std::size_t k = 0;
    while (k < a) {
      if (++c[k] < d.invariant_factors[k].get_ui()) break;
      c[k] = 0;
      ++k;
    }
    if (k == a) break;
  }
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace detail

// Nikulin's delta for even 2-elementary lattices: 0 iff q is integral on
// all of A_L. Evaluated on every element; integrality on generators alone
// is not enough.
inline int delta_invariant(const Lattice& l) {
  if (!l.is_even())
    throw std::domain_error("delta_invariant: lattice is not even");
  DiscriminantData d = discriminant(l);
  for (const Int& f : d.invariant_factors)
    if (f != 2)
      throw std::domain_error("delta_invariant: lattice is not 2-elementary");
  for (const Rat& q : detail::all_q_values(d)) {
    if (q.get_den() != 1) return 1;
  }
  return 0;
}

// A primitive sublattice together with its embedding into the ambient basis.
struct Sublattice {
  IntMatrix basis;  // columns: ambient coordinates of the sublattice basis
  Lattice lattice;  // restricted gram matrix
};

// Saturated orthogonal complement of the span of the given columns.
inline Sublattice orthogonal_complement(const IntMatrix& sub,
                                        const Lattice& ambient) {
  if (sub.rows() != ambient.rank())
    throw std::invalid_argument("orthogonal_complement: basis shape mismatch");
  if (torlat::rank(sub) != sub.cols())
    throw std::invalid_argument(
        "orthogonal_complement: dependent basis columns");
  IntMatrix constraints = sub.transpose() * ambient.gram;
  IntMatrix basis = integer_kernel(constraints);
  Lattice restricted(basis.transpose() * ambient.gram * basis);
  return {std::move(basis), std::move(restricted)};
}

// Rank, signature, parity, invariant factors and the full multiset of
// discriminant q-values: equal for isometric lattices, and enough to
// separate every lattice this project handles (discriminants well below
// the Conway-Sloane bound of 17 for a genus with several classes).
struct GenusFingerprint {
  std::size_t rank = 0;
  std::pair<std::size_t, std::size_t> signature{0, 0};
  bool even = true;
  std::vector<Int> invariant_factors;
  std::vector<Rat> q_multiset;

  friend bool operator==(const GenusFingerprint& a,
                         const GenusFingerprint& b) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << "rank " << rank << ", sig (" << signature.first << ","
       << signature.second << "), " << (even ? "even" : "odd")
       << ", factors (";
    for (std::size_t i = 0; i < invariant_factors.size(); ++i)
      os << (i ? "," : "") << invariant_factors[i].get_str();
    os << "), q {";
    for (std::size_t i = 0; i < q_multiset.size(); ++i)
      os << (i ? "," : "") << q_multiset[i].get_str();
    os << "}";
    return os.str();
  }
};

inline GenusFingerprint genus_fingerprint(const Lattice& l) {
  GenusFingerprint fp;
  fp.rank = l.rank();
  fp.signature = l.signature();
  fp.even = l.is_even();
  DiscriminantData d = discriminant(l);
  fp.invariant_factors = d.invariant_factors;
  fp.q_multiset = detail::all_q_values(d);
  return fp;
}

}  // namespace torlat
