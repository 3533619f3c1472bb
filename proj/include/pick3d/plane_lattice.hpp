#pragma once

#include <optional>
#include <utility>

#include "pick3d/normal.hpp"
#include "pick3d/surd.hpp"

namespace pick3d {

/// An ordered basis of the full plane lattice Z^3 ∩ K for a primitive
/// normal. Certified: cross(b1,b2) == cross_sign * normal (cross_sign = ±1),
/// which for a primitive normal is exactly the condition that (b1,b2)
/// generates all of Z^3 ∩ K.
struct PlaneLattice {
  Normal normal;
  IntVec3 b1;
  IntVec3 b2;
  SurdValue covolume;
  int cross_sign;

  /// Validating constructor; throws NotInLattice when (b1,b2) is not a
  /// basis of the full plane lattice.
  static PlaneLattice from_basis(const Normal& n, IntVec3 b1, IntVec3 b2);
};

using BasisPair = std::pair<IntVec3, IntVec3>;

/// The textbook solution basis of a*x+b*y+c*z = 0: alpha = (-b,a,0),
/// beta = (-c,0,a). Requires a != 0 (otherwise the two are parallel);
/// throws DegenerateBasis.
BasisPair solution_basis(const Normal& n);

/// Orthogonal in-plane pair eta1 = (-b,a,0), eta2 = (-a^2 c, -a b c,
/// a^3 + a b^2), obtained by clearing denominators in the Gram-Schmidt step
/// applied to the solution basis. Requires a != 0; throws DegenerateBasis.
BasisPair orthogonal_basis(const Normal& n);

/// A basis of the full lattice Z^3 ∩ K via extended-gcd column elimination,
/// certified by the cross(b1,b2) == ±normal postcondition (normalized to +).
PlaneLattice kernel_basis(const Normal& n);

/// Area of the parallelogram spanned by u and v, as |t|*sqrt(a^2+b^2+c^2)
/// where cross(u,v) = t*n. The overload without a normal derives it from
/// the cross product (zero area for dependent u,v); the overload with a
/// normal throws NotInPlane when cross(u,v) is not an integer multiple of n.
/// Both also evaluate det(n|u|v)/|n| and verify it agrees.
SurdValue parallelogram_area(const IntVec3& u, const IntVec3& v);
SurdValue parallelogram_area(const Normal& n, const IntVec3& u, const IntVec3& v);

/// Integer coordinates of v in the basis of L, or nullopt when v is not a
/// lattice point of L's plane.
std::optional<std::pair<Int, Int>> decompose_in_basis(const PlaneLattice& L,
                                                      const IntVec3& v);

/// |k1*l2 - k2*l1| for u = k1*b1 + k2*b2, v = l1*b1 + l2*b2: the index of
/// the sublattice generated by (u,v), 0 when they are dependent. Throws
/// NotInLattice when u or v has no integer coordinates in L.
Int sublattice_index(const PlaneLattice& L, const IntVec3& u, const IntVec3& v);

/// True iff (u,v) generates all of Z^3 ∩ K, i.e. cross(u,v) == ±n.
bool is_lattice_basis(const Normal& n, const IntVec3& u, const IntVec3& v);

}  // namespace pick3d
