#pragma once

#include <random>

#include "torlat/linalg.hpp"

namespace torlat::test {

using Rng = std::mt19937;

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                               int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

// Product of random shears, swaps and sign flips: det +-1, small entries.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n,
                                   int operations = 12) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> kind(0, 3);
  IntMatrix m = IntMatrix::identity(n);
  for (int op = 0; op < operations; ++op) {
    std::size_t i = pick(rng), j = pick(rng);
    switch (kind(rng)) {
      case 0: {  // row_i += c * row_j
        if (i == j) break;
        int c = coeff(rng);
        for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
        break;
      }
      case 1: {  // swap rows
        if (i == j) break;
        for (std::size_t k = 0; k < n; ++k) std::swap(m(i, k), m(j, k));
        break;
      }
      case 2: {  // negate a row
        for (std::size_t k = 0; k < n; ++k) m(i, k) = -m(i, k);
        break;
      }
      default: {  // col_i += c * col_j
        if (i == j) break;
        int c = coeff(rng);
        for (std::size_t k = 0; k < n; ++k) m(k, i) += c * m(k, j);
        break;
      }
    }
  }
  return m;
}

// Unimodular with det exactly +1.
inline IntMatrix random_special_unimodular(Rng& rng, std::size_t n) {
  for (;;) {
    IntMatrix m = random_unimodular(rng, n);
    Int d = det(m);
    if (d == 1) return m;
    // flip the sign of one row to land in det +1
    for (std::size_t k = 0; k < n; ++k) m(0, k) = -m(0, k);
    if (det(m) == 1) return m;
  }
}

// Small non-degenerate symmetric gram matrix with |det| small enough to
// enumerate the discriminant group: P^T D P for a random unimodular P.
inline IntMatrix random_small_gram(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<int> diag(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  IntMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    d(i, i) = (sign(rng) ? 1 : -1) * diag(rng);
  IntMatrix p = random_unimodular(rng, n, 8);
  return p.transpose() * d * p;
}

}  // namespace torlat::test
