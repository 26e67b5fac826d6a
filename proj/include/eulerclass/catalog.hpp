#pragma once

// The thirteen symmorphic wallpaper groups Z^2 x| G, with generator matrices
// for G and the expected order of the Euler class per characteristic.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eulerclass/euler.hpp"
#include "eulerclass/intmat.hpp"

namespace eulerclass {

/// Verdict without provenance, as stored in the catalog.
struct ExpectedVerdict {
  Verdict verdict = Verdict::Trivial;
  std::uint64_t order = 0;  // only for Known

  static ExpectedVerdict trivial() { return {Verdict::Trivial, 0}; }
  static ExpectedVerdict known(std::uint64_t m) { return {Verdict::Known, m}; }
  static ExpectedVerdict infinite() { return {Verdict::Infinite, 0}; }

  bool matches(const OrderResult& r) const;
  std::string to_string() const;

  friend bool operator==(const ExpectedVerdict&, const ExpectedVerdict&) = default;
};

struct CatalogEntry {
  std::string name;
  std::size_t rank = 2;
  std::vector<IntMatrix> generators;
  std::size_t point_group_order = 0;
  ExpectedVerdict at_zero;
  ExpectedVerdict at_two;
  ExpectedVerdict at_three;
  /// Any prime other than 2 and 3.
  ExpectedVerdict at_other_prime;
  std::string source;

  const ExpectedVerdict& expected(std::uint64_t p) const;
};

/// Standard generator matrices.
namespace generators {
IntMatrix r90();
IntMatrix r120();
IntMatrix r60();
IntMatrix m1();  // diag(1, -1)
IntMatrix m2();  // swap of coordinates
IntMatrix m3();  // [[0,-1],[-1,0]]
}  // namespace generators

/// p1, p2, pm, cm, pmm, cmm, p4, p4m, p3, p3m1, p31m, p6, p6m.
const std::vector<CatalogEntry>& catalog_entries();

/// Case-insensitive. Throws UnknownName listing the valid symbols.
const CatalogEntry& catalog_lookup(std::string_view name);

}  // namespace eulerclass
