#pragma once

// Finite subgroups of GL_n(Z): closure from generators, element orders,
// p-part decomposition, p-regular elements and subgroup enumeration.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eulerclass/intmat.hpp"

namespace eulerclass {

inline constexpr std::size_t kDefaultClosureCap = 20000;

bool is_prime(std::uint64_t n);
/// True iff n = p^a for some a >= 0 (so n = 1 counts).
bool is_p_power(std::uint64_t n, std::uint64_t p);
/// The largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// A finite group of unimodular n x n integer matrices. The identity is
/// always elements()[0].
class PointGroup {
 public:
  /// Breadth-first closure of the generators. Throws NotUnimodular when some
  /// generator has |det| != 1, DimensionMismatch on a generator of the wrong
  /// size, and NotFinite once more than `cap` elements have been produced.
  static PointGroup closure(std::size_t dim, std::span<const IntMatrix> generators,
                            std::size_t cap = kDefaultClosureCap);

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() == 1; }

  const std::vector<IntMatrix>& elements() const { return elements_; }
  /// Indices into elements().
  const std::vector<std::size_t>& generators() const { return generators_; }
  std::vector<IntMatrix> generator_matrices() const;

  bool contains(const IntMatrix& m) const { return index_.count(m) != 0; }
  std::optional<std::size_t> index_of(const IntMatrix& m) const;

  /// Orders of elements(), in the same order.
  const std::vector<std::size_t>& element_orders() const { return orders_; }

 private:
  PointGroup(std::size_t dim, std::vector<IntMatrix> elements, std::vector<std::size_t> generators);

  // Subgroups of `parent` given as (member indices, generator indices) pairs,
  // indices referring to parent.elements(). Output is sorted by (order,
  // member indices).
  using IndexSet = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;
  static std::vector<PointGroup> from_index_sets(const PointGroup& parent, std::vector<IndexSet> sets);

  friend std::vector<PointGroup> all_subgroups(const PointGroup& g);
  friend std::vector<PointGroup> p_subgroups(const PointGroup& g, std::uint64_t p);

  std::size_t dim_;
  std::vector<IntMatrix> elements_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> orders_;
  std::map<IntMatrix, std::size_t> index_;
};

/// Least m >= 1 with g^m = Id. Throws NotFinite if there is none up to cap.
std::size_t element_order(const IntMatrix& g, std::size_t cap = kDefaultClosureCap);

/// g = p_part * p_prime_part with commuting factors, p_part of p-power order
/// and p_prime_part of order prime to p.
struct PDecomposition {
  IntMatrix p_part;
  IntMatrix p_prime_part;
};

/// Throws InvalidCharacteristic unless p is prime, NotFinite if g has no
/// finite order below the cap.
PDecomposition p_decompose(const IntMatrix& g, std::uint64_t p, std::size_t cap = kDefaultClosureCap);

/// Elements whose order is prime to p. For p = 0 every element qualifies.
std::vector<IntMatrix> p_regular_elements(const PointGroup& g, std::uint64_t p);

/// Every subgroup, deduplicated by element set and sorted by (order, element
/// indices). Intended for point groups of wallpaper scale (|G| <= 48).
std::vector<PointGroup> all_subgroups(const PointGroup& g);

/// The subgroups of p-power order (including the trivial one). Throws
/// InvalidCharacteristic unless p is prime.
std::vector<PointGroup> p_subgroups(const PointGroup& g, std::uint64_t p);

}  // namespace eulerclass
