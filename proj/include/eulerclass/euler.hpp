#pragma once

// Order of the Euler class [k_Gamma] in G_0(k Gamma) for a split
// crystallographic group Gamma and a field k of characteristic p.
//
// Finiteness: [k_Gamma] has finite order iff det(1 - x) vanishes on every
// p-regular element x of the point group. Each Brauer-character value of the
// alternating homology class is det(1 - x), which is also the alternating sum
// of the traces of x on the exterior powers of the lattice. Both routes are
// available, and the second one is kept as a cross-check.
//
// Divisibility: for p > 0, every p-subgroup H of G acting fixed-point-freely
// on A has |H| dividing the order. The p-part of the order is bounded by the
// largest p-subgroup. exact_order() combines these with the complete
// rank-2 classification.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eulerclass/crystal.hpp"
#include "eulerclass/fingroup.hpp"
#include "eulerclass/intmat.hpp"

namespace eulerclass {

/// Characteristic of the coefficient field: 0 or a prime.
class Characteristic {
 public:
  /// Throws InvalidCharacteristic for values that are neither 0 nor prime.
  explicit Characteristic(std::uint64_t p);

  std::uint64_t value() const { return p_; }
  bool is_zero() const { return p_ == 0; }

  friend bool operator==(Characteristic, Characteristic) = default;

 private:
  std::uint64_t p_;
};

/// Stable names of the rules exact_order() can fire.
namespace rule {
inline constexpr std::string_view kFiniteness = "thm-a";
inline constexpr std::string_view kMapsOntoZ = "sec-5.1";
inline constexpr std::string_view kFixedPointFreePGroup = "sec-5.3.1";
inline constexpr std::string_view kPrimeOrder = "sec-5.3.2";
inline constexpr std::string_view kRank2Trivial = "sec-5.3.3-trivial";
inline constexpr std::string_view kRank2SlPGroup = "sec-5.3.3-sl-pgroup";
inline constexpr std::string_view kRank2Klein = "sec-5.3.3-klein";
inline constexpr std::string_view kRank2P4m = "sec-5.3.3-p4m";
inline constexpr std::string_view kRank2P3m = "sec-5.3.3-p3m";
inline constexpr std::string_view kBoundsOnly = "bounds-only";
/// Caveat attached to Bounded results with p > 0.
inline constexpr std::string_view kPPartOnly = "p-part-bound-only";
/// Caveat attached to Bounded(1, 1) results in characteristic 0.
inline constexpr std::string_view kUnclassified = "finite-order-unclassified";
}  // namespace rule

enum class Verdict { Trivial, Known, Infinite, Bounded };

std::string_view to_string(Verdict v);

class OrderResult {
 public:
  static OrderResult trivial(std::vector<std::string> provenance);
  /// Known(1) collapses to Trivial.
  static OrderResult known(std::uint64_t order, std::vector<std::string> provenance);
  static OrderResult infinite(std::vector<std::string> provenance);
  /// Requires 1 <= lower and lower | upper_p_part.
  static OrderResult bounded(std::uint64_t lower, std::uint64_t upper_p_part, std::vector<std::string> provenance);

  Verdict verdict() const { return verdict_; }
  /// The order for Known, 1 for Trivial, 0 otherwise.
  std::uint64_t order() const { return order_; }
  std::uint64_t lower() const { return lower_; }
  std::uint64_t upper_p_part() const { return upper_; }
  const std::vector<std::string>& provenance() const { return provenance_; }

  /// "Trivial", "Known(4)", "Infinite" or "Bounded(2,4)".
  std::string verdict_string() const;

  bool same_verdict(const OrderResult& other) const {
    return verdict_ == other.verdict_ && order_ == other.order_ && lower_ == other.lower_ && upper_ == other.upper_;
  }

 private:
  OrderResult(Verdict v, std::uint64_t order, std::uint64_t lower, std::uint64_t upper,
              std::vector<std::string> provenance);

  Verdict verdict_;
  std::uint64_t order_ = 0;
  std::uint64_t lower_ = 0;
  std::uint64_t upper_ = 0;
  std::vector<std::string> provenance_;
};

/// x -> det(1 - x) on the point group, aligned with point_group().elements().
struct EulerCharacter {
  std::vector<IntMatrix> elements;
  std::vector<Integer> values;

  /// Throws NotInGroup.
  const Integer& at(const IntMatrix& x) const;
};

EulerCharacter euler_character(const CrystGroup& gamma);

bool has_finite_order(const CrystGroup& gamma, Characteristic p);

/// Same criterion evaluated through alternating exterior-power traces.
bool has_finite_order_by_exterior_traces(const CrystGroup& gamma, Characteristic p);

/// Every non-identity element has det(1 - x) != 0.
bool acts_fixed_point_freely(const PointGroup& g);

/// Largest |H| over p-subgroups H of the point group acting fixed-point
/// freely; it divides the order of [k_Gamma] whenever that order is finite.
/// Throws InvalidCharacteristic unless p is prime.
std::uint64_t order_lower_bound(const CrystGroup& gamma, std::uint64_t p);

/// Largest order of a p-subgroup (the Sylow p-part of |G|). Bounds the
/// p-part of the order of [k_Gamma], not the full order.
std::uint64_t order_upper_bound_p_part(const CrystGroup& gamma, std::uint64_t p);

OrderResult exact_order(const CrystGroup& gamma, Characteristic p);

/// Sanity diagnostic for a p-group acting fixed-point-freely: true iff it is
/// cyclic, or p = 2 and it is generalized quaternion. Throws
/// PreconditionViolation if g is not a p-group or does not act
/// fixed-point-freely.
bool fpf_group_shape_check(const PointGroup& g, std::uint64_t p);

/// delta / gcd(delta, dim): the divisor of the order of [M] when delta is the
/// gcd of the dimensions of projective modules and dim = dim_k M.
Integer order_divisor(const Integer& delta, const Integer& dim);

}  // namespace eulerclass
