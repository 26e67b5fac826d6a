#pragma once

// Test-only reference computations. None of these share code paths with the
// library routines they check.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "eulerclass/fingroup.hpp"
#include "eulerclass/intmat.hpp"

namespace oracle {

using eulerclass::Integer;
using eulerclass::IntMatrix;

/// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 1) return m(0, 0);
  Integer sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m(0, c)) == 0) continue;
    IntMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    Integer term = m(0, c) * cofactor_det(minor);
    if (c % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

/// Schoolbook product, written out independently of the library's mul().
inline IntMatrix naive_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.dim();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

/// Minor on the given rows and columns, by cofactor expansion.
inline Integer minor(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.empty()) return 1;
  IntMatrix sub(rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) sub(a, b) = m(rows[a], cols[b]);
  return cofactor_det(sub);
}

/// Sum of principal i x i minors = trace of the i-th exterior power.
inline Integer principal_minor_sum(const IntMatrix& m, std::size_t i) {
  const std::size_t n = m.dim();
  Integer sum = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != i) continue;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1U << k)) idx.push_back(k);
    sum += minor(m, idx, idx);
  }
  return sum;
}

/// Number of subgroups of a group with at most 16 elements, by testing every
/// subset containing the identity for closure under multiplication.
inline std::size_t brute_force_subgroup_count(const eulerclass::PointGroup& g) {
  const auto& el = g.elements();
  const std::size_t n = el.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const IntMatrix prod = naive_mul(el[i], el[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (el[k] == prod) table[i][j] = k;
    }
  std::size_t identity = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (el[k].is_identity()) identity = k;

  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (!(mask & (1U << identity))) continue;
    bool closed = true;
    for (std::size_t i = 0; closed && i < n; ++i)
      for (std::size_t j = 0; closed && j < n; ++j)
        if ((mask & (1U << i)) && (mask & (1U << j)) && !(mask & (1U << table[i][j]))) closed = false;
    if (closed) ++count;
  }
  return count;
}

/// Whether some nonzero v with entries in [-bound, bound] satisfies m v = v
/// for every m.
inline bool has_small_common_fixed_vector(std::size_t n, const std::vector<IntMatrix>& ms, int bound) {
  std::vector<long> v(n, -bound);
  while (true) {
    bool nonzero = false;
    for (long x : v) nonzero |= x != 0;
    if (nonzero) {
      bool fixed = true;
      for (const auto& m : ms) {
        for (std::size_t i = 0; fixed && i < n; ++i) {
          Integer s = 0;
          for (std::size_t j = 0; j < n; ++j) s += m(i, j) * v[j];
          fixed = s == v[i];
        }
        if (!fixed) break;
      }
      if (fixed) return true;
    }
    std::size_t k = 0;
    while (k < n && v[k] == bound) v[k++] = -bound;
    if (k == n) return false;
    ++v[k];
  }
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

/// A random unimodular matrix together with its inverse, built from
/// elementary row operations.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n), inv = IntMatrix::identity(n);
  if (n < 2) return {u, inv};
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> k(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const int c = k(rng);
    IntMatrix e = IntMatrix::identity(n), einv = IntMatrix::identity(n);
    e(i, j) = c;
    einv(i, j) = -c;
    u = naive_mul(e, u);
    inv = naive_mul(inv, einv);
  }
  return {u, inv};
}

/// Block-diagonal matrix diag(a, b).
inline IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.dim() + b.dim();
  IntMatrix m(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b(i, j);
  return m;
}

/// Companion matrix of a monic polynomial given by its lower coefficients
/// c_0..c_{n-1} (X^n + c_{n-1} X^{n-1} + ... + c_0).
inline IntMatrix companion(const std::vector<long>& lower) {
  const std::size_t n = lower.size();
  IntMatrix m(n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -lower[i];
  return m;
}

}  // namespace oracle
