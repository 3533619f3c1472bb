#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "pick3d/numeric.hpp"

namespace pick3d {

/// Exact integer 2-D point (chart coordinates in a plane-lattice basis).
struct IntVec2 {
  Int u{0};
  Int w{0};

  bool operator==(const IntVec2&) const = default;
};

enum class PointLocation { Inside, Boundary, Outside };

const char* to_string(PointLocation loc);

/// Sign of (b-a) x (c-a): +1 left turn, -1 right turn, 0 collinear.
int orient2d(const IntVec2& a, const IntVec2& b, const IntVec2& c);

/// p lies on the closed segment [a,b].
bool on_segment(const IntVec2& a, const IntVec2& b, const IntVec2& p);

/// Closed segments [a0,a1] and [b0,b1] share at least one point.
bool segments_intersect(const IntVec2& a0, const IntVec2& a1,
                        const IntVec2& b0, const IntVec2& b1);

/// True iff the closed polyline is simple: no zero-length edges, non-adjacent
/// edges disjoint, adjacent edges meeting only at their shared vertex
/// (collinear overlaps count as intersections). Degenerate zero-area chains
/// come out false.
bool is_simple(std::span<const IntVec2> coords);

/// Exact classification of pt against the simple polygon.
PointLocation point_classify(std::span<const IntVec2> coords, const IntVec2& pt);

/// Signed doubled shoelace area of the closed polyline.
Int shoelace_doubled(std::span<const IntVec2> coords);

std::ostream& operator<<(std::ostream& os, const IntVec2& p);

}  // namespace pick3d
