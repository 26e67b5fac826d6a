#include "eulerclass/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "eulerclass/errors.hpp"

namespace eulerclass {

bool ExpectedVerdict::matches(const OrderResult& r) const {
  if (r.verdict() != verdict) return false;
  return verdict != Verdict::Known || r.order() == order;
}

std::string ExpectedVerdict::to_string() const {
  if (verdict == Verdict::Known) return "Known(" + std::to_string(order) + ")";
  return std::string(eulerclass::to_string(verdict));
}

const ExpectedVerdict& CatalogEntry::expected(std::uint64_t p) const {
  switch (p) {
    case 0:
      return at_zero;
    case 2:
      return at_two;
    case 3:
      return at_three;
    default:
      return at_other_prime;
  }
}

namespace generators {
IntMatrix r90() { return IntMatrix::from_rows({{0, -1}, {1, 0}}); }
IntMatrix r120() { return IntMatrix::from_rows({{0, -1}, {1, -1}}); }
IntMatrix r60() { return IntMatrix::from_rows({{1, -1}, {1, 0}}); }
IntMatrix m1() { return IntMatrix::from_rows({{1, 0}, {0, -1}}); }
IntMatrix m2() { return IntMatrix::from_rows({{0, 1}, {1, 0}}); }
IntMatrix m3() { return IntMatrix::from_rows({{0, -1}, {-1, 0}}); }
}  // namespace generators

namespace {

using V = ExpectedVerdict;

CatalogEntry entry(std::string name, std::vector<IntMatrix> gens, std::size_t order, V zero, V two, V three, V other,
                   std::string source) {
  CatalogEntry e;
  e.name = std::move(name);
  e.generators = std::move(gens);
  e.point_group_order = order;
  e.at_zero = zero;
  e.at_two = two;
  e.at_three = three;
  e.at_other_prime = other;
  e.source = std::move(source);
  return e;
}

std::vector<CatalogEntry> build() {
  using namespace generators;
  const IntMatrix minus_id = -IntMatrix::identity(2);
  const V t = V::trivial(), inf = V::infinite();
  std::vector<CatalogEntry> c;
  c.push_back(entry("p1", {}, 1, t, t, t, t, "trivial point group: A^Gamma = A"));
  c.push_back(entry("p2", {minus_id}, 2, inf, V::known(2), inf, inf, "G inside SL_2(Z) and a 2-group"));
  c.push_back(entry("pm", {m1()}, 2, t, t, t, t, "G_1 = G n SL_2(Z) trivial"));
  c.push_back(entry("cm", {m2()}, 2, t, t, t, t, "G_1 = G n SL_2(Z) trivial"));
  c.push_back(entry("pmm", {m1(), minus_id}, 4, inf, V::known(2), inf, inf, "G = <-Id, g>, g a det -1 involution"));
  c.push_back(entry("cmm", {m2(), -m2()}, 4, inf, V::known(2), inf, inf, "G = <-Id, g>, g a det -1 involution"));
  c.push_back(entry("p4", {r90()}, 4, inf, V::known(4), inf, inf, "G inside SL_2(Z) and a 2-group"));
  c.push_back(entry("p4m", {r90(), m2()}, 8, inf, V::known(4), inf, inf, "cellular chain complex of the p4m pattern"));
  c.push_back(entry("p3", {r120()}, 3, inf, inf, V::known(3), inf, "G inside SL_2(Z) and a 3-group"));
  c.push_back(entry("p3m1", {r120(), m3()}, 6, inf, inf, V::known(3), inf, "cellular chain complex of the p3m1 pattern"));
  c.push_back(entry("p31m", {r120(), m2()}, 6, inf, inf, V::known(3), inf, "same argument as p3m1"));
  c.push_back(entry("p6", {r60()}, 6, inf, inf, inf, inf, "computed: G_1 = C_6 is not a p-group"));
  c.push_back(entry("p6m", {r60(), m2()}, 12, inf, inf, inf, inf, "computed: G_1 = C_6 is not a p-group"));
  return c;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_lookup(std::string_view name) {
  const std::string key = lowercase(name);
  for (const auto& e : catalog_entries())
    if (e.name == key) return e;
  std::string valid;
  for (const auto& e : catalog_entries()) valid += (valid.empty() ? "" : ", ") + e.name;
  throw UnknownName("unknown wallpaper group '" + std::string(name) + "'; valid symbols: " + valid +
                    " (non-symmorphic types pg, pmg, pgg, p4g are not supported)");
}

}  // namespace eulerclass
