#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "torlat/lattice.hpp"

namespace torlat {

// Bounded backtracking search for a unimodular P with P^T Ga P = Gb.
// Columns of P are enumerated among vectors with coefficients in
// [-coeff_bound, coeff_bound] matching the required norms and pairings.
// Returning nullopt means "not found within the bound", never a proof of
// non-isometry.
inline std::optional<IntMatrix> isometry_search(const Lattice& a,
                                                const Lattice& b,
                                                long coeff_bound = 5) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("isometry_search: rank mismatch");
  if (coeff_bound < 1)
    throw std::invalid_argument("isometry_search: coeff_bound must be >= 1");
  const std::size_t n = a.rank();
  if (n == 0) return IntMatrix(0, 0);
  // A unimodular congruence preserves the determinant exactly.
  if (a.det() != b.det()) return std::nullopt;

  const IntMatrix& ga = a.gram;
  const IntMatrix& gb = b.gram;

  std::set<Int> needed;
  for (std::size_t j = 0; j < n; ++j) needed.insert(gb(j, j));

  // One pass over the coefficient box, bucketing vectors by norm.
  std::map<Int, std::vector<std::vector<long>>> by_norm;
  std::vector<long> v(n, -coeff_bound);
  for (;;) {
    bool zero = true;
    for (long c : v)
      if (c != 0) zero = false;
    if (!zero) {
      Int norm = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (v[j] == 0) continue;
          norm += v[i] * ga(i, j) * v[j];
        }
      }
      if (needed.count(norm)) by_norm[norm].push_back(v);
    }
    std::size_t k = 0;
    while (k < n && ++v[k] > coeff_bound) v[k++] = -coeff_bound;
    if (k == n) break;
  }

  std::vector<std::vector<long>> chosen(n);
  std::vector<std::vector<Int>> ga_chosen(n);  // Ga * p_i for pairing checks

  std::function<std::optional<IntMatrix>(std::size_t)> extend =
      [&](std::size_t depth) -> std::optional<IntMatrix> {
    if (depth == n) {
      IntMatrix p(n, n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) p(i, j) = chosen[j][i];
      Int d = det(p);
      if (d == 1 || d == -1) return p;
      return std::nullopt;
    }
    auto it = by_norm.find(gb(depth, depth));
    if (it == by_norm.end()) return std::nullopt;
    for (const auto& cand : it->second) {
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        Int dot = 0;
        for (std::size_t r = 0; r < n; ++r)
          if (cand[r] != 0) dot += ga_chosen[i][r] * cand[r];
        if (dot != gb(i, depth)) ok = false;
      }
      if (!ok) continue;
      chosen[depth] = cand;
      ga_chosen[depth].assign(n, 0);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (cand[c] != 0) ga_chosen[depth][r] += ga(r, c) * cand[c];
      if (auto res = extend(depth + 1)) return res;
    }
    return std::nullopt;
  };

  return extend(0);
}

}  // namespace torlat
