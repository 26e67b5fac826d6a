#pragma once

// Exact integer linear algebra on small square matrices.
//
// Everything here works over arbitrary-precision integers (GMP). Minors of
// exterior powers and the stacked systems used for fixed lattices overflow
// 64 bits quickly, and the vanishing test det(1 - x) == 0 must be exact.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace eulerclass {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  /// Zero matrix of dimension n (n >= 1).
  explicit IntMatrix(std::size_t n);
  /// Row-major entries; entries.size() must be n*n.
  IntMatrix(std::size_t n, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  /// Throws DimensionMismatch on ragged or non-square input.
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t dim() const { return n_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::span<const Integer> entries() const { return a_; }
  IntVector row(std::size_t i) const;

  bool is_identity() const;

  /// Canonical text form, e.g. "[[0,-1],[1,0]]". Used for hashing, ordering
  /// of reports and as the element identity inside groups.
  std::string key() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }
  /// Lexicographic on (dimension, row-major entries).
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t n_;
  std::vector<Integer> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);

/// Polynomial with integer coefficients, lowest degree first.
struct IntPoly {
  std::vector<Integer> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  Integer evaluate(const Integer& x) const;
  std::string to_string() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

/// Sublattice of Z^n given by a Z-basis (possibly empty).
struct Lattice {
  std::size_t ambient_rank = 0;
  std::vector<IntVector> basis;

  std::size_t rank() const { return basis.size(); }
  bool is_zero() const { return basis.empty(); }
};

/// Throws DimensionMismatch.
IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix power(const IntMatrix& m, std::size_t k);
IntVector apply(const IntMatrix& m, const IntVector& v);

Integer trace(const IntMatrix& m);

/// Fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& m);

/// det(X*Id - m), computed with the Faddeev-LeVerrier recurrence. Every
/// division in the recurrence is exact over Z.
IntPoly charpoly(const IntMatrix& m);

/// Matrix of the i-th exterior power on the basis e_I, I ranging over the
/// i-subsets of {0..n-1} in lexicographic order. Entry (I, J) is the minor
/// of m on rows I and columns J. Throws OutOfRange unless 0 <= i <= n.
IntMatrix exterior_power(const IntMatrix& m, std::size_t i);

/// Lexicographically ordered i-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t i);

/// det(Id - m), by direct elimination.
Integer det_one_minus(const IntMatrix& m);

/// sum_i (-1)^i trace(exterior_power(m, i)). Equal to det_one_minus(m), but
/// computed through the exterior algebra instead of one determinant.
Integer alternating_exterior_trace(const IntMatrix& m);

/// Z-basis of {v in Z^n : m v = v for every m in ms}, in Hermite normal
/// form. With ms empty the result is the standard basis of Z^n.
Lattice fixed_lattice(std::size_t n, std::span<const IntMatrix> ms);

std::string to_string(const IntVector& v);

}  // namespace eulerclass
