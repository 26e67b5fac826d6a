#pragma once

// Split crystallographic groups Gamma = A x| G with A = Z^n and G a finite
// subgroup of GL_n(Z). Only the point group and the lattice are stored;
// every question answered here factors through the action of G on A.

#include <cstddef>
#include <span>

#include "eulerclass/fingroup.hpp"
#include "eulerclass/intmat.hpp"

namespace eulerclass {

class CrystGroup {
 public:
  CrystGroup(std::size_t rank, PointGroup point_group);

  std::size_t rank() const { return rank_; }
  const PointGroup& point_group() const { return point_group_; }
  /// Elements of the point group acting trivially on A. Always the trivial
  /// group for matrix point groups, so Gamma-bar = Gamma / C(A) is G itself.
  const PointGroup& action_kernel() const { return action_kernel_; }

 private:
  std::size_t rank_;
  PointGroup point_group_;
  PointGroup action_kernel_;
};

/// Throws DimensionMismatch, NotUnimodular or NotFinite.
CrystGroup make_cryst(std::size_t rank, std::span<const IntMatrix> generators,
                      std::size_t cap = kDefaultClosureCap);

/// A^Gamma: lattice vectors fixed by the whole point group.
Lattice fixed_sublattice(const CrystGroup& gamma);

/// Gamma maps onto Z iff A^Gamma is nonzero.
bool maps_onto_z(const CrystGroup& gamma);

/// Whether the centralizer of a finite-order element with point-group image
/// g is infinite, i.e. whether g fixes a nonzero lattice vector
/// (det(1 - g) == 0). Elements of infinite order always have infinite
/// centralizer and are not covered here. Throws NotInGroup.
bool centralizer_is_infinite(const CrystGroup& gamma, const IntMatrix& g);

}  // namespace eulerclass
