#pragma once

#include <vector>

#include "pick3d/polygon.hpp"

namespace pick3d {

/// Lattice-point counts of a polygon, both taken in Z^3: I strictly inside
/// the planar region, B on the closed boundary curve.
struct PickCounts {
  Int interior;
  Int boundary;

  bool operator==(const PickCounts&) const = default;
};

/// Lattice points strictly between p and q: gcd3(q-p) - 1.
/// Throws DegenerateSegment for p == q.
Int segment_interior_count(const IntVec3& p, const IntVec3& q);

/// B: one gcd term per edge counts that edge's interior points plus one
/// endpoint, so the cyclic sum covers every boundary point exactly once.
Int boundary_count(const LatticePolygon& P);

/// Ground-truth interior count: classifies every integer point of the chart
/// bounding box with the exact point-in-polygon predicate. The chart is a
/// bijection between the plane's Z^3 points and Z^2, so this is the Z^3 count.
Int interior_count_bruteforce(const LatticePolygon& P, const PlaneLattice& L);

/// Pick-inverted interior count: shoelace/2 - B/2 + 1 in chart coordinates.
/// Throws InternalInconsistency if the inversion is non-integral or negative.
Int interior_count_fast(const LatticePolygon& P, const PlaneLattice& L);

/// Strictly-interior chart points with w in [w_lo, w_hi]; the pieces of any
/// row partition of the bounding box sum to interior_count_bruteforce.
Int interior_count_in_rows(const Chart2D& chart, const Int& w_lo, const Int& w_hi);

/// I + B/2 - 1, exact.
Rat pick_value(const PickCounts& counts);

/// B via boundary_count, I via the brute-force oracle.
PickCounts oracle_counts(const LatticePolygon& P, const PlaneLattice& L);

/// Every boundary lattice point in chart coordinates, edge by edge
/// (each point exactly once); size equals boundary_count.
std::vector<IntVec2> boundary_points_in_chart(const Chart2D& chart);

}  // namespace pick3d
