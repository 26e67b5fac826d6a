#include "eulerclass/intmat.hpp"

#include <sstream>
#include <utility>

#include "eulerclass/errors.hpp"

namespace eulerclass {

IntMatrix::IntMatrix(std::size_t n) : n_(n), a_(n * n) {
  if (n == 0) throw DimensionMismatch("matrix dimension must be at least 1");
}

IntMatrix::IntMatrix(std::size_t n, std::vector<Integer> entries) : n_(n), a_(std::move(entries)) {
  if (n == 0) throw DimensionMismatch("matrix dimension must be at least 1");
  if (a_.size() != n * n) throw DimensionMismatch("entry count does not match dimension");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> r;
  r.reserve(rows.size());
  for (const auto& row : rows) {
    IntVector v;
    for (long x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return from_rows(r);
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw DimensionMismatch("matrix has no rows");
  std::vector<Integer> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionMismatch("matrix rows must all have length " + std::to_string(n));
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return IntMatrix(n, std::move(entries));
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(a_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                   a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
}

bool IntMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::string IntMatrix::key() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += ',';
      s += (*this)(i, j).get_str();
    }
    s += ']';
  }
  s += ']';
  return s;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (std::size_t k = 0; k < a.a_.size(); ++k) {
    const int c = cmp(a.a_[k], b.a_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("cannot multiply matrices of different dimension");
  const std::size_t n = a.dim();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return mul(a, b); }

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("cannot subtract matrices of different dimension");
  IntMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = -a(i, j);
  return c;
}

IntMatrix power(const IntMatrix& m, std::size_t k) {
  IntMatrix result = IntMatrix::identity(m.dim());
  IntMatrix base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

IntVector apply(const IntMatrix& m, const IntVector& v) {
  if (v.size() != m.dim()) throw DimensionMismatch("vector length does not match matrix dimension");
  IntVector out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

Integer trace(const IntMatrix& m) {
  Integer t = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

Integer det(const IntMatrix& m) {
  const std::size_t n = m.dim();
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(a(swap_row, k)) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Integer d = a(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPoly::to_string() const {
  std::string s;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const Integer& c = coefficients[k];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (s.empty()) {
      if (sgn(c) < 0) s += '-';
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) s += mag.get_str();
    if (k >= 1) s += 'X';
    if (k >= 2) s += '^' + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

IntPoly charpoly(const IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix acc(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k + 1];
    Integer t = trace(m * acc);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), t.get_mpz_t(), k);
    c[n - k] = -q;
  }
  return IntPoly{std::move(c)};
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t i) {
  std::vector<std::vector<std::size_t>> out;
  if (i > n) return out;
  std::vector<std::size_t> cur(i);
  for (std::size_t k = 0; k < i; ++k) cur[k] = k;
  while (true) {
    out.push_back(cur);
    // advance to the next combination in lexicographic order
    std::size_t k = i;
    while (k > 0 && cur[k - 1] == n - i + k - 1) --k;
    if (k == 0) break;
    ++cur[k - 1];
    for (std::size_t t = k; t < i; ++t) cur[t] = cur[t - 1] + 1;
  }
  return out;
}

IntMatrix exterior_power(const IntMatrix& m, std::size_t i) {
  const std::size_t n = m.dim();
  if (i > n) throw OutOfRange("exterior power degree " + std::to_string(i) + " exceeds dimension " + std::to_string(n));
  if (i == 0) return IntMatrix::identity(1);
  const auto subsets = index_subsets(n, i);
  IntMatrix out(subsets.size());
  IntMatrix minor(i);
  for (std::size_t r = 0; r < subsets.size(); ++r) {
    for (std::size_t c = 0; c < subsets.size(); ++c) {
      for (std::size_t a = 0; a < i; ++a)
        for (std::size_t b = 0; b < i; ++b) minor(a, b) = m(subsets[r][a], subsets[c][b]);
      out(r, c) = det(minor);
    }
  }
  return out;
}

Integer det_one_minus(const IntMatrix& m) { return det(IntMatrix::identity(m.dim()) - m); }

Integer alternating_exterior_trace(const IntMatrix& m) {
  Integer sum = 0;
  for (std::size_t i = 0; i <= m.dim(); ++i) {
    Integer t = trace(exterior_power(m, i));
    if (i % 2 == 0)
      sum += t;
    else
      sum -= t;
  }
  return sum;
}

namespace {

// Replaces (x, y) by (s*x + t*y, -(b/g)*x + (a/g)*y) where g = gcd(a, b) =
// s*a + t*b. The 2x2 transform has determinant 1.
void unimodular_combine(Integer& x, Integer& y, const Integer& s, const Integer& t, const Integer& a_over_g,
                        const Integer& b_over_g) {
  Integer nx = s * x + t * y;
  Integer ny = a_over_g * y - b_over_g * x;
  x = std::move(nx);
  y = std::move(ny);
}

// Row-style Hermite normal form of a full-row-rank integer matrix.
void hermite_rows(std::vector<IntVector>& rows, std::size_t ncols) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
    for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][col]) == 0) continue;
      Integer a = rows[pivot_row][col], b = rows[i][col], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ag = a / g, bg = b / g;
      for (std::size_t j = 0; j < ncols; ++j) unimodular_combine(rows[pivot_row][j], rows[i][j], s, t, ag, bg);
    }
    if (sgn(rows[pivot_row][col]) == 0) continue;
    if (sgn(rows[pivot_row][col]) < 0)
      for (auto& x : rows[pivot_row]) x = -x;
    const Integer& p = rows[pivot_row][col];
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), p.get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= q * rows[pivot_row][j];
    }
    ++pivot_row;
  }
}

}  // namespace

Lattice fixed_lattice(std::size_t n, std::span<const IntMatrix> ms) {
  for (const auto& m : ms)
    if (m.dim() != n) throw DimensionMismatch("fixed_lattice: matrix of dimension " + std::to_string(m.dim()) +
                                              " in a rank-" + std::to_string(n) + " system");

  // Stack the blocks (m - Id) into one system B and column-reduce it with
  // unimodular operations, tracking them in U. Once B*U is in column echelon
  // form, the columns of U facing zero columns are a Z-basis of ker B.
  std::vector<IntVector> system;
  for (const auto& m : ms)
    for (std::size_t i = 0; i < n; ++i) {
      IntVector r = m.row(i);
      r[i] -= 1;
      system.push_back(std::move(r));
    }
  IntMatrix u = IntMatrix::identity(n);

  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < system.size() && pivot_col < n; ++r) {
    auto& row = system[r];
    for (std::size_t j = pivot_col + 1; j < n; ++j) {
      if (sgn(row[j]) == 0) continue;
      Integer a = row[pivot_col], b = row[j], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ag = a / g, bg = b / g;
      for (auto& rr : system) unimodular_combine(rr[pivot_col], rr[j], s, t, ag, bg);
      for (std::size_t i = 0; i < n; ++i) unimodular_combine(u(i, pivot_col), u(i, j), s, t, ag, bg);
    }
    if (sgn(row[pivot_col]) != 0) ++pivot_col;
  }

  Lattice lat{n, {}};
  for (std::size_t j = pivot_col; j < n; ++j) {
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = u(i, j);
    lat.basis.push_back(std::move(v));
  }
  hermite_rows(lat.basis, n);
  return lat;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

}  // namespace eulerclass
