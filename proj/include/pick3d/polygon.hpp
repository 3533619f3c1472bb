#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pick3d/plane_lattice.hpp"
#include "pick3d/predicates.hpp"

namespace pick3d {

/// Validated simple lattice polygon lying in one affine rational plane,
/// stored counterclockwise as seen from the +normal side (so the doubled
/// vector area is a nonnegative multiple of the normal).
class LatticePolygon {
 public:
  const std::vector<IntVec3>& vertices() const { return vertices_; }
  const Normal& normal() const { return normal_; }
  /// dot(normal, v) for every vertex; 0 for planes through the origin.
  const Int& offset() const { return offset_; }
  /// t >= 0 with doubled vector area == t * normal.
  const Int& area_multiple() const { return area_multiple_; }
  std::size_t size() const { return vertices_.size(); }

  bool operator==(const LatticePolygon&) const = default;

 private:
  friend LatticePolygon polygon_from_vertices(std::vector<IntVec3> vertices,
                                              const std::optional<IntVec3>& declared_normal);
  LatticePolygon(std::vector<IntVec3> vertices, Normal normal, Int offset, Int t)
      : vertices_(std::move(vertices)),
        normal_(std::move(normal)),
        offset_(std::move(offset)),
        area_multiple_(std::move(t)) {}

  std::vector<IntVec3> vertices_;
  Normal normal_;
  Int offset_;
  Int area_multiple_;
};

/// Validates and normalizes. Throws TooFewVertices, DuplicateVertex,
/// DegenerateArea, NotCoplanar, NormalMismatch, SelfIntersecting.
LatticePolygon polygon_from_vertices(std::vector<IntVec3> vertices,
                                     const std::optional<IntVec3>& declared_normal = std::nullopt);

/// Doubled vector area sum(cross(v_i, v_{i+1})) == area_multiple * normal.
IntVec3 vector_area(const LatticePolygon& P);

/// (t/2) * sqrt(a^2+b^2+c^2).
SurdValue polygon_area(const LatticePolygon& P);

/// Integer coordinates of the vertices relative to vertices[0] in a
/// plane-lattice basis: v_i = origin + u_i*b1 + w_i*b2 exactly.
struct Chart2D {
  IntVec3 origin;
  PlaneLattice lattice;
  std::vector<IntVec2> coords;
};

/// Requires L.normal == P.normal; throws NotInLattice for a corrupted basis.
Chart2D lattice_chart(const LatticePolygon& P, const PlaneLattice& L);

}  // namespace pick3d
