#include "pick3d/polygon.hpp"

#include <algorithm>

#include "pick3d/errors.hpp"

namespace pick3d {

namespace {

IntVec3 doubled_vector_area(const std::vector<IntVec3>& vs) {
  IntVec3 acc;
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    acc = acc + cross(vs[i], vs[(i + 1) % n]);
  }
  return acc;
}

}  // namespace

LatticePolygon polygon_from_vertices(std::vector<IntVec3> vertices,
                                     const std::optional<IntVec3>& declared_normal) {
  const std::size_t n = vertices.size();
  if (n < 3)
    fail(Errc::TooFewVertices, "polygon needs at least 3 vertices, got " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices[i] == vertices[(i + 1) % n])
      fail(Errc::DuplicateVertex,
           "vertices " + std::to_string(i) + " and " + std::to_string((i + 1) % n) +
               " coincide");
  }

  IntVec3 s2 = doubled_vector_area(vertices);
  if (s2.is_zero())
    fail(Errc::DegenerateArea, "vertices span no area (collinear or cancelling)");
  Normal normal = primitive_normal(s2);

  if (declared_normal) {
    if (declared_normal->is_zero())
      fail(Errc::NormalMismatch, "declared normal is the zero vector");
    if (!(primitive_normal(*declared_normal) == normal))
      fail(Errc::NormalMismatch, "declared normal is not parallel to the derived normal " +
                                     normal.str());
  }

  Int offset = dot(normal.vec(), vertices[0]);
  for (std::size_t i = 1; i < n; ++i) {
    if (dot(normal.vec(), vertices[i]) != offset)
      fail(Errc::NotCoplanar, "vertex " + std::to_string(i) + " is off the plane");
  }

  // S2 is perpendicular to the plane, hence an exact multiple of the normal.
  Int t;
  {
    const IntVec3& nv = normal.vec();
    const Int& lead = nv.x != 0 ? nv.x : (nv.y != 0 ? nv.y : nv.z);
    const Int& slead = nv.x != 0 ? s2.x : (nv.y != 0 ? s2.y : s2.z);
    if (!mpz_divisible_p(slead.get_mpz_t(), lead.get_mpz_t()) || !((slead / lead) * nv == s2))
      fail(Errc::InternalInconsistency, "vector area is not a multiple of the normal");
    t = slead / lead;
  }

  // Simplicity is decided exactly in chart coordinates of the full plane
  // lattice (a bijection, so 2-D simplicity equals 3-D simplicity).
  PlaneLattice L = kernel_basis(normal);
  std::vector<IntVec2> coords;
  coords.reserve(n);
  for (const IntVec3& v : vertices) {
    auto kc = decompose_in_basis(L, v - vertices[0]);
    if (!kc) fail(Errc::InternalInconsistency, "in-plane vertex failed lattice decomposition");
    coords.push_back(IntVec2{std::move(kc->first), std::move(kc->second)});
  }
  if (!is_simple(coords)) fail(Errc::SelfIntersecting, "polygon edges self-intersect");

  if (t < 0) {
    std::reverse(vertices.begin(), vertices.end());
    t = -t;
  }
  return LatticePolygon(std::move(vertices), std::move(normal), std::move(offset),
                        std::move(t));
}

IntVec3 vector_area(const LatticePolygon& P) {
  return P.area_multiple() * P.normal().vec();
}

SurdValue polygon_area(const LatticePolygon& P) {
  return SurdValue(make_rat(P.area_multiple(), Int(2)), P.normal().norm_sq());
}

Chart2D lattice_chart(const LatticePolygon& P, const PlaneLattice& L) {
  if (!(L.normal == P.normal()))
    fail(Errc::NotInLattice, "lattice normal " + L.normal.str() +
                                 " differs from polygon normal " + P.normal().str());
  Chart2D chart{P.vertices()[0], L, {}};
  chart.coords.reserve(P.size());
  for (const IntVec3& v : P.vertices()) {
    auto kc = decompose_in_basis(L, v - chart.origin);
    if (!kc)
      fail(Errc::NotInLattice, "vertex has no integer coordinates in the given basis");
    chart.coords.push_back(IntVec2{std::move(kc->first), std::move(kc->second)});
  }
  return chart;
}

}  // namespace pick3d
