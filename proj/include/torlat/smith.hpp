#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "torlat/int_matrix.hpp"

namespace torlat {

// left * M * right = diag(diag), with left and right unimodular and
// diag[i] >= 0, diag[i] | diag[i+1].
struct SmithDecomposition {
  IntMatrix left;
  std::vector<Int> diag;
  IntMatrix right;

  IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
    return d;
  }
};

namespace detail {

inline void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}
inline void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}
inline void add_row(IntMatrix& a, std::size_t dst, std::size_t src,
                    const Int& f) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) += f * a(src, c);
}
inline void add_col(IntMatrix& a, std::size_t dst, std::size_t src,
                    const Int& f) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) += f * a(r, src);
}
inline void negate_row(IntMatrix& a, std::size_t i) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
  using namespace detail;
  std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  std::size_t n = rows < cols ? rows : cols;

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (!found || mpz_cmpabs(a(i, j).get_mpz_t(),
                                   a(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) goto done;
      if (pi != t) {
        swap_rows(a, t, pi);
        swap_rows(left, t, pi);
      }
      if (pj != t) {
        swap_cols(a, t, pj);
        swap_cols(right, t, pj);
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row(a, i, t, -q);
        add_row(left, i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        add_col(a, j, t, -q);
        add_col(right, j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block for the chain to hold.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row(a, t, i, 1);
            add_row(left, t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(left, t);
    }
  }
done:
  std::vector<Int> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
  return {std::move(left), std::move(diag), std::move(right)};
}

// Basis of the saturated kernel sublattice {x in Z^cols : m x = 0},
// returned as columns. The basis is primitive by construction: it is a
// block of columns of a unimodular matrix.
inline IntMatrix integer_kernel(const IntMatrix& m) {
  SmithDecomposition snf = smith_normal_form(m);
  std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (const Int& d : snf.diag)
    if (d != 0) ++rank;
  IntMatrix kernel(cols, cols - rank);
  for (std::size_t j = rank; j < cols; ++j)
    for (std::size_t i = 0; i < cols; ++i)
      kernel(i, j - rank) = snf.right(i, j);
  return kernel;
}

inline std::size_t rank(const IntMatrix& m) {
  SmithDecomposition snf = smith_normal_form(m);
  std::size_t r = 0;
  for (const Int& d : snf.diag)
    if (d != 0) ++r;
  return r;
}

}  // namespace torlat
