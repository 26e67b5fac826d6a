#include "eulerclass/euler.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "eulerclass/errors.hpp"

namespace eulerclass {

Characteristic::Characteristic(std::uint64_t p) : p_(p) {
  if (p != 0 && !is_prime(p))
    throw InvalidCharacteristic("characteristic must be 0 or a prime, got " + std::to_string(p));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial:
      return "Trivial";
    case Verdict::Known:
      return "Known";
    case Verdict::Infinite:
      return "Infinite";
    case Verdict::Bounded:
      return "Bounded";
  }
  return "?";
}

OrderResult::OrderResult(Verdict v, std::uint64_t order, std::uint64_t lower, std::uint64_t upper,
                         std::vector<std::string> provenance)
    : verdict_(v), order_(order), lower_(lower), upper_(upper), provenance_(std::move(provenance)) {
  if (provenance_.empty()) throw PreconditionViolation("an order result needs a provenance trail");
}

OrderResult OrderResult::trivial(std::vector<std::string> provenance) {
  return OrderResult(Verdict::Trivial, 1, 1, 1, std::move(provenance));
}

OrderResult OrderResult::known(std::uint64_t order, std::vector<std::string> provenance) {
  if (order == 0) throw PreconditionViolation("Known(m) needs m >= 1");
  if (order == 1) return trivial(std::move(provenance));
  return OrderResult(Verdict::Known, order, order, order, std::move(provenance));
}

OrderResult OrderResult::infinite(std::vector<std::string> provenance) {
  return OrderResult(Verdict::Infinite, 0, 0, 0, std::move(provenance));
}

OrderResult OrderResult::bounded(std::uint64_t lower, std::uint64_t upper_p_part,
                                 std::vector<std::string> provenance) {
  if (lower == 0 || upper_p_part % lower != 0)
    throw PreconditionViolation("Bounded(lower, upper) needs lower >= 1 dividing upper");
  return OrderResult(Verdict::Bounded, 0, lower, upper_p_part, std::move(provenance));
}

std::string OrderResult::verdict_string() const {
  switch (verdict_) {
    case Verdict::Known:
      return "Known(" + std::to_string(order_) + ")";
    case Verdict::Bounded:
      return "Bounded(" + std::to_string(lower_) + "," + std::to_string(upper_) + ")";
    default:
      return std::string(to_string(verdict_));
  }
}

const Integer& EulerCharacter::at(const IntMatrix& x) const {
  auto it = std::find(elements.begin(), elements.end(), x);
  if (it == elements.end()) throw NotInGroup(x.key() + " is not in the point group");
  return values[static_cast<std::size_t>(it - elements.begin())];
}

EulerCharacter euler_character(const CrystGroup& gamma) {
  EulerCharacter chi;
  chi.elements = gamma.point_group().elements();
  chi.values.reserve(chi.elements.size());
  for (const auto& x : chi.elements) chi.values.push_back(det_one_minus(x));
  return chi;
}

bool has_finite_order(const CrystGroup& gamma, Characteristic p) {
  for (const auto& x : p_regular_elements(gamma.point_group(), p.value()))
    if (sgn(det_one_minus(x)) != 0) return false;
  return true;
}

bool has_finite_order_by_exterior_traces(const CrystGroup& gamma, Characteristic p) {
  for (const auto& x : p_regular_elements(gamma.point_group(), p.value()))
    if (sgn(alternating_exterior_trace(x)) != 0) return false;
  return true;
}

bool acts_fixed_point_freely(const PointGroup& g) {
  for (const auto& x : g.elements())
    if (!x.is_identity() && sgn(det_one_minus(x)) == 0) return false;
  return true;
}

namespace {

std::uint64_t lower_bound_from(const std::vector<PointGroup>& p_subs) {
  std::uint64_t best = 1;
  for (const auto& h : p_subs)
    if (acts_fixed_point_freely(h)) best = std::max<std::uint64_t>(best, h.order());
  return best;
}

std::uint64_t upper_bound_from(const std::vector<PointGroup>& p_subs) {
  std::uint64_t best = 1;
  for (const auto& h : p_subs) best = std::max<std::uint64_t>(best, h.order());
  return best;
}

std::vector<std::string> trail(std::vector<std::string> prov, std::string_view tag) {
  prov.emplace_back(tag);
  return prov;
}

bool is_minus_identity(const IntMatrix& m) { return (-m).is_identity(); }

// The rank-2 classification. Matching uses conjugacy invariants only:
// |G|, |G_1| with G_1 = G n SL_2(Z), and the (order, det) multiset.
std::optional<OrderResult> classify_rank2(const PointGroup& g, std::uint64_t p, const std::vector<std::string>& prov) {
  const std::size_t n = g.order();
  std::size_t n_sl = 0;
  std::size_t det_minus_involutions = 0;
  bool has_minus_identity = false;
  std::map<std::size_t, std::size_t> order_count;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = g.elements()[i];
    const std::size_t ord = g.element_orders()[i];
    const bool in_sl = det(x) == 1;
    if (in_sl) ++n_sl;
    if (!in_sl && ord == 2) ++det_minus_involutions;
    if (is_minus_identity(x)) has_minus_identity = true;
    ++order_count[ord];
  }

  if (n_sl == 1) return OrderResult::trivial(trail(prov, rule::kRank2Trivial));
  if (p > 0 && n_sl == n && is_p_power(n_sl, p)) return OrderResult::known(n, trail(prov, rule::kRank2SlPGroup));
  if (p == 2 && n == 4 && has_minus_identity && order_count[1] == 1 && order_count[2] == 3 &&
      det_minus_involutions >= 1)
    return OrderResult::known(2, trail(prov, rule::kRank2Klein));
  const std::map<std::size_t, std::size_t> dihedral8{{1, 1}, {2, 5}, {4, 2}};
  if (p == 2 && n == 8 && n_sl == 4 && order_count == dihedral8)
    return OrderResult::known(4, trail(prov, rule::kRank2P4m));
  if (p == 3 && n == 6 && n_sl == 3 && det_minus_involutions == 3)
    return OrderResult::known(3, trail(prov, rule::kRank2P3m));
  return std::nullopt;
}

}  // namespace

std::uint64_t order_lower_bound(const CrystGroup& gamma, std::uint64_t p) {
  return lower_bound_from(p_subgroups(gamma.point_group(), p));
}

std::uint64_t order_upper_bound_p_part(const CrystGroup& gamma, std::uint64_t p) {
  return upper_bound_from(p_subgroups(gamma.point_group(), p));
}

OrderResult exact_order(const CrystGroup& gamma, Characteristic chr) {
  const std::uint64_t p = chr.value();
  const PointGroup& g = gamma.point_group();
  const std::vector<std::string> prov{std::string(rule::kFiniteness)};

  if (!has_finite_order(gamma, chr)) return OrderResult::infinite(prov);
  if (!fixed_sublattice(gamma).is_zero() || g.is_trivial()) return OrderResult::trivial(trail(prov, rule::kMapsOntoZ));

  const std::uint64_t n = g.order();
  if (p > 0 && is_p_power(n, p) && acts_fixed_point_freely(g))
    return OrderResult::known(n, trail(prov, rule::kFixedPointFreePGroup));

  // A group of prime order without common fixed vectors acts fixed-point
  // freely, so the previous rule normally decides this case already. For
  // p != |G| such a group fails the finiteness test above.
  if (is_prime(n) && p == n) return OrderResult::known(n, trail(prov, rule::kPrimeOrder));

  if (gamma.rank() == 2)
    if (auto r = classify_rank2(g, p, prov)) return *std::move(r);

  auto bounded = trail(prov, rule::kBoundsOnly);
  if (p == 0) return OrderResult::bounded(1, 1, trail(std::move(bounded), rule::kUnclassified));
  const auto p_subs = p_subgroups(g, p);
  return OrderResult::bounded(lower_bound_from(p_subs), upper_bound_from(p_subs),
                              trail(std::move(bounded), rule::kPPartOnly));
}

bool fpf_group_shape_check(const PointGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidCharacteristic(std::to_string(p) + " is not a prime");
  const std::size_t n = g.order();
  if (!is_p_power(n, p)) throw PreconditionViolation("group of order " + std::to_string(n) + " is not a p-group");
  if (!acts_fixed_point_freely(g)) throw PreconditionViolation("group does not act fixed-point-freely");

  const auto& orders = g.element_orders();
  if (std::find(orders.begin(), orders.end(), n) != orders.end()) return true;  // cyclic
  if (p != 2 || n < 8) return false;
  // generalized quaternion: a unique involution and a cyclic subgroup of index 2
  const auto involutions = std::count(orders.begin(), orders.end(), std::size_t{2});
  const bool index_two_cyclic = std::find(orders.begin(), orders.end(), n / 2) != orders.end();
  return involutions == 1 && index_two_cyclic;
}

Integer order_divisor(const Integer& delta, const Integer& dim) {
  if (sgn(delta) <= 0 || sgn(dim) <= 0) throw PreconditionViolation("order_divisor needs positive arguments");
  Integer g;
  mpz_gcd(g.get_mpz_t(), delta.get_mpz_t(), dim.get_mpz_t());
  return delta / g;
}

}  // namespace eulerclass
