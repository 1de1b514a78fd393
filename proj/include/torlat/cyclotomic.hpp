#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "torlat/int_matrix.hpp"

namespace torlat {

// Integer polynomials, coefficients stored low degree first.
using Poly = std::vector<Int>;

inline Poly poly_trim(Poly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

inline int poly_degree(const Poly& p) {
  return static_cast<int>(poly_trim(p).size()) - 1;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return poly_trim(c);
}

// Exact division by a monic divisor; nullopt if the remainder is nonzero.
inline std::optional<Poly> poly_divide_exact(const Poly& num,
                                             const Poly& den) {
  Poly n = poly_trim(num), d = poly_trim(den);
  if (d.back() != 1)
    throw std::invalid_argument("poly_divide_exact: divisor must be monic");
  if (n.size() < d.size()) return std::nullopt;
  Poly q(n.size() - d.size() + 1);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    Int c = n[i + d.size() - 1];
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) n[i + j] -= c * d[j];
  }
  for (const Int& c : n)
    if (c != 0) return std::nullopt;
  return q;
}

// Phi_n via (x^n - 1) / prod_{d | n, d < n} Phi_d.
inline const Poly& cyclotomic(int n) {
  static std::map<int, Poly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  Poly xn_minus_1(n + 1);
  xn_minus_1[0] = -1;
  xn_minus_1[n] = 1;
  Poly result = xn_minus_1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto q = poly_divide_exact(result, cyclotomic(d));
    if (!q) throw std::logic_error("cyclotomic: inexact division");
    result = *q;
  }
  return cache.emplace(n, poly_trim(result)).first->second;
}

// Factor a monic polynomial as a product of cyclotomics Phi_n, n <= max_n.
// nullopt when some factor is not cyclotomic.
inline std::optional<std::map<int, int>> factor_into_cyclotomics(
    const Poly& p, int max_n = 12) {
  Poly rest = poly_trim(p);
  if (rest.back() != 1) return std::nullopt;
  std::map<int, int> factors;
  bool progress = true;
  while (poly_degree(rest) > 0 && progress) {
    progress = false;
    for (int n = 1; n <= max_n; ++n) {
      if (auto q = poly_divide_exact(rest, cyclotomic(n))) {
        ++factors[n];
        rest = *q;
        progress = true;
        break;
      }
    }
  }
  if (poly_degree(rest) != 0 || rest[0] != 1) return std::nullopt;
  return factors;
}

}  // namespace torlat
