#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "torlat/int_matrix.hpp"

namespace torlat {

// Dense rational matrix, used internally for dual-lattice and signature work.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  explicit RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Rat(m(i, j));
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("RatMatrix product: shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Gauss-Jordan inverse; throws on singular input.
  RatMatrix inverse() const {
    if (rows_ != cols_)
      throw std::invalid_argument("RatMatrix inverse: non-square");
    std::size_t n = rows_;
    RatMatrix a = *this;
    RatMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a(piv, col) == 0) ++piv;
      if (piv == n) throw std::domain_error("RatMatrix inverse: singular");
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(piv, j));
        std::swap(inv(col, j), inv(piv, j));
      }
      Rat p = a(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) /= p;
        inv(col, j) /= p;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a(i, col) == 0) continue;
        Rat f = a(i, col);
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) -= f * a(col, j);
          inv(i, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

// Exact determinant via fraction-free (Bareiss) elimination.
inline Int det(const IntMatrix& m) {
  if (!m.is_square())
    throw std::invalid_argument("det: matrix is not square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

inline Int trace(const IntMatrix& m) {
  if (!m.is_square())
    throw std::invalid_argument("trace: matrix is not square");
  Int t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// Characteristic polynomial det(xI - m), coefficients low to high, monic.
// Faddeev-LeVerrier; the divisions are exact over Z.
inline std::vector<Int> char_poly(const IntMatrix& m) {
  if (!m.is_square())
    throw std::invalid_argument("char_poly: matrix is not square");
  std::size_t n = m.rows();
  std::vector<Int> coeff(n + 1);
  coeff[n] = 1;
  IntMatrix mk = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    Int c = -trace(mk);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned>(k));
    coeff[n - k] = c;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c;
  }
  return coeff;
}

// Exact signature of a non-degenerate symmetric form by rational congruent
// diagonalization. Returns (positive pivots, negative pivots).
inline std::pair<std::size_t, std::size_t> congruent_diagonalize(
    const IntMatrix& g) {
  if (!g.is_symmetric())
    throw std::invalid_argument("congruent_diagonalize: not symmetric");
  if (det(g) == 0)
    throw std::domain_error("congruent_diagonalize: degenerate form");
  std::size_t n = g.rows();
  RatMatrix a(g);
  std::size_t plus = 0, minus = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      // Prefer a later nonzero diagonal entry; else create one with
      // b_k <- b_k + b_j for some j with a(k,j) != 0.
      std::size_t d = k + 1;
      while (d < n && a(d, d) == 0) ++d;
      if (d < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(d, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, d));
      } else {
        std::size_t j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n)
          throw std::domain_error("congruent_diagonalize: degenerate form");
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    Rat p = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / p;
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t r = 0; r < n; ++r) a(r, i) -= f * a(r, k);
    }
    if (p > 0)
      ++plus;
    else
      ++minus;
  }
  return {plus, minus};
}

}  // namespace torlat
