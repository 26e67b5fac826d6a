#include "eulerclass/crystal.hpp"

#include <string>
#include <utility>
#include <vector>

#include "eulerclass/errors.hpp"

namespace eulerclass {

namespace {

PointGroup trivial_kernel(const PointGroup& g) {
  std::vector<IntMatrix> kernel_gens;
  for (const auto& x : g.elements())
    if (x.is_identity()) kernel_gens.push_back(x);
  return PointGroup::closure(g.dim(), kernel_gens);
}

}  // namespace

CrystGroup::CrystGroup(std::size_t rank, PointGroup point_group)
    : rank_(rank), point_group_(std::move(point_group)), action_kernel_(trivial_kernel(point_group_)) {
  if (point_group_.dim() != rank_)
    throw DimensionMismatch("point group of dimension " + std::to_string(point_group_.dim()) +
                            " cannot act on Z^" + std::to_string(rank_));
}

CrystGroup make_cryst(std::size_t rank, std::span<const IntMatrix> generators, std::size_t cap) {
  if (rank == 0) throw DimensionMismatch("lattice rank must be at least 1");
  return CrystGroup(rank, PointGroup::closure(rank, generators, cap));
}

Lattice fixed_sublattice(const CrystGroup& gamma) {
  return fixed_lattice(gamma.rank(), gamma.point_group().elements());
}

bool maps_onto_z(const CrystGroup& gamma) { return !fixed_sublattice(gamma).is_zero(); }

bool centralizer_is_infinite(const CrystGroup& gamma, const IntMatrix& g) {
  if (!gamma.point_group().contains(g)) throw NotInGroup(g.key() + " is not in the point group");
  return sgn(det_one_minus(g)) == 0;
}

}  // namespace eulerclass
