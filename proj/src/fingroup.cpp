#include "eulerclass/fingroup.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <utility>

#include "eulerclass/errors.hpp"

namespace eulerclass {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) return n == 1;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t q = 1;
  if (p < 2 || n == 0) return q;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

PointGroup::PointGroup(std::size_t dim, std::vector<IntMatrix> elements, std::vector<std::size_t> generators)
    : dim_(dim), elements_(std::move(elements)), generators_(std::move(generators)) {
  orders_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], i);
    orders_.push_back(element_order(elements_[i], elements_.size()));
  }
}

PointGroup PointGroup::closure(std::size_t dim, std::span<const IntMatrix> generators, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.dim() != dim)
      throw DimensionMismatch("generator " + g.key() + " is not " + std::to_string(dim) + "x" +
                              std::to_string(dim));
    if (abs(det(g)) != 1) throw NotUnimodular("generator " + g.key() + " has determinant other than +-1");
  }

  std::vector<IntMatrix> elements{IntMatrix::identity(dim)};
  std::map<IntMatrix, std::size_t> seen{{elements.front(), 0}};
  std::vector<std::size_t> gen_index;
  for (const auto& g : generators) {
    auto [it, inserted] = seen.emplace(g, elements.size());
    if (inserted) elements.push_back(g);
    if (std::find(gen_index.begin(), gen_index.end(), it->second) == gen_index.end())
      gen_index.push_back(it->second);
  }

  // For a finite group the monoid generated by the generators is the group,
  // so right multiplication by generators reaches every element.
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < elements.size(); ++i) queue.push_back(i);
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      IntMatrix y = elements[x] * g;
      if (seen.count(y)) continue;
      if (elements.size() >= cap)
        throw NotFinite("closure exceeded " + std::to_string(cap) + " elements; generators likely span an infinite group");
      seen.emplace(y, elements.size());
      queue.push_back(elements.size());
      elements.push_back(std::move(y));
    }
  }
  return PointGroup(dim, std::move(elements), std::move(gen_index));
}

std::vector<IntMatrix> PointGroup::generator_matrices() const {
  std::vector<IntMatrix> out;
  out.reserve(generators_.size());
  for (auto i : generators_) out.push_back(elements_[i]);
  return out;
}

std::optional<std::size_t> PointGroup::index_of(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t element_order(const IntMatrix& g, std::size_t cap) {
  IntMatrix x = g;
  for (std::size_t m = 1; m <= cap; ++m) {
    if (x.is_identity()) return m;
    x = x * g;
  }
  throw NotFinite("no power g^m = Id with m <= " + std::to_string(cap) + " for g = " + g.key());
}

namespace {

// Inverse of a modulo m, for gcd(a, m) = 1 and m >= 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a % m);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((s0 % mm) + mm) % mm);
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidCharacteristic(std::to_string(p) + " is not a prime");
}

}  // namespace

PDecomposition p_decompose(const IntMatrix& g, std::uint64_t p, std::size_t cap) {
  require_prime(p);
  const std::uint64_t e = element_order(g, cap);
  const std::uint64_t pa = p_part(e, p);
  const std::uint64_t m = e / pa;
  const IntMatrix id = IntMatrix::identity(g.dim());
  if (pa == 1) return {id, g};
  if (m == 1) return {g, id};
  const std::uint64_t to_p = (m * inverse_mod(m, pa)) % e;
  const std::uint64_t to_p_prime = (pa * inverse_mod(pa, m)) % e;
  return {power(g, to_p), power(g, to_p_prime)};
}

std::vector<IntMatrix> p_regular_elements(const PointGroup& g, std::uint64_t p) {
  if (p != 0) require_prime(p);
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (p == 0 || g.element_orders()[i] % p != 0) out.push_back(g.elements()[i]);
  return out;
}

namespace {

struct CayleyTable {
  std::vector<std::vector<std::size_t>> product;

  explicit CayleyTable(const PointGroup& g) : product(g.order(), std::vector<std::size_t>(g.order())) {
    const auto& el = g.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
      for (std::size_t j = 0; j < el.size(); ++j) product[i][j] = *g.index_of(el[i] * el[j]);
  }
};

struct IndexSubgroup {
  std::vector<bool> members;
  std::vector<std::size_t> gens;
  std::size_t size = 0;
};

IndexSubgroup close_indices(const CayleyTable& t, std::vector<std::size_t> gens) {
  IndexSubgroup h;
  h.members.assign(t.product.size(), false);
  h.members[0] = true;
  h.size = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (auto s : gens) {
      const std::size_t y = t.product[x][s];
      if (h.members[y]) continue;
      h.members[y] = true;
      ++h.size;
      stack.push_back(y);
    }
  }
  h.gens = std::move(gens);
  return h;
}

// Every subgroup H is reached from the trivial group by a chain
// 1 < <g1> < <g1,g2> < ... < H, so growing known subgroups one element at a
// time finds all of them. `admit_element` and `admit_group` prune the search;
// they must be closed downward along such chains.
template <typename ElementFilter, typename GroupFilter>
std::vector<IndexSubgroup> grow_subgroups(const CayleyTable& t, ElementFilter admit_element, GroupFilter admit_group) {
  std::vector<IndexSubgroup> found{close_indices(t, {})};
  std::set<std::vector<bool>> seen{found.front().members};
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto hi : frontier) {
      for (std::size_t g = 0; g < t.product.size(); ++g) {
        if (found[hi].members[g] || !admit_element(g)) continue;
        auto gens = found[hi].gens;
        gens.push_back(g);
        IndexSubgroup k = close_indices(t, std::move(gens));
        if (!admit_group(k) || !seen.insert(k.members).second) continue;
        next.push_back(found.size());
        found.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  return found;
}

}  // namespace

std::vector<PointGroup> PointGroup::from_index_sets(const PointGroup& parent, std::vector<IndexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
  });
  std::vector<PointGroup> out;
  out.reserve(sets.size());
  std::vector<std::size_t> position(parent.order(), 0);
  for (const auto& [members, gens] : sets) {
    std::vector<IntMatrix> elements;
    for (std::size_t k = 0; k < members.size(); ++k) {
      position[members[k]] = k;
      elements.push_back(parent.elements()[members[k]]);
    }
    std::vector<std::size_t> local_gens;
    for (auto x : gens) local_gens.push_back(position[x]);
    out.push_back(PointGroup(parent.dim(), std::move(elements), std::move(local_gens)));
  }
  return out;
}

namespace {

std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> to_index_sets(std::vector<IndexSubgroup> subs) {
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> sets;
  sets.reserve(subs.size());
  for (auto& s : subs) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < s.members.size(); ++i)
      if (s.members[i]) members.push_back(i);
    sets.emplace_back(std::move(members), std::move(s.gens));
  }
  return sets;
}

}  // namespace

std::vector<PointGroup> all_subgroups(const PointGroup& g) {
  const CayleyTable t(g);
  auto subs = grow_subgroups(t, [](std::size_t) { return true; }, [](const IndexSubgroup&) { return true; });
  return PointGroup::from_index_sets(g, to_index_sets(std::move(subs)));
}

std::vector<PointGroup> p_subgroups(const PointGroup& g, std::uint64_t p) {
  require_prime(p);
  const CayleyTable t(g);
  const auto& orders = g.element_orders();
  // Chains inside a p-group only pass through p-subgroups, so pruning on
  // p-elements and p-power orders still reaches every p-subgroup.
  auto subs = grow_subgroups(
      t, [&](std::size_t i) { return is_p_power(orders[i], p); },
      [&](const IndexSubgroup& s) { return is_p_power(s.size, p); });
  return PointGroup::from_index_sets(g, to_index_sets(std::move(subs)));
}

}  // namespace eulerclass
