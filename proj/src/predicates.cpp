#include "pick3d/predicates.hpp"

#include <ostream>

#include "pick3d/detail/geom2d.hpp"

namespace pick3d {

namespace {

detail::Pt2<Int> pt(const IntVec2& p) { return {p.u, p.w}; }

// Cross-pair dot product, used for the adjacent-edge overlap test.
Int dot2(const IntVec2& a, const IntVec2& b) { return a.u * b.u + a.w * b.w; }

IntVec2 sub(const IntVec2& a, const IntVec2& b) { return {a.u - b.u, a.w - b.w}; }

}  // namespace

const char* to_string(PointLocation loc) {
  switch (loc) {
    case PointLocation::Inside: return "Inside";
    case PointLocation::Boundary: return "Boundary";
    case PointLocation::Outside: return "Outside";
  }
  return "?";
}

int orient2d(const IntVec2& a, const IntVec2& b, const IntVec2& c) {
  return detail::orient<Int>(pt(a), pt(b), pt(c));
}

bool on_segment(const IntVec2& a, const IntVec2& b, const IntVec2& p) {
  return detail::on_closed_segment<Int>(pt(a), pt(b), pt(p));
}

bool segments_intersect(const IntVec2& a0, const IntVec2& a1,
                        const IntVec2& b0, const IntVec2& b1) {
  int o1 = orient2d(a0, a1, b0);
  int o2 = orient2d(a0, a1, b1);
  int o3 = orient2d(b0, b1, a0);
  int o4 = orient2d(b0, b1, a1);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;  // proper crossing
  if (o1 == 0 && on_segment(a0, a1, b0)) return true;
  if (o2 == 0 && on_segment(a0, a1, b1)) return true;
  if (o3 == 0 && on_segment(b0, b1, a0)) return true;
  if (o4 == 0 && on_segment(b0, b1, a1)) return true;
  return false;
}

bool is_simple(std::span<const IntVec2> coords) {
  const std::size_t n = coords.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (coords[i] == coords[(i + 1) % n]) return false;  // zero-length edge
  }
  for (std::size_t i = 0; i < n; ++i) {
    const IntVec2& a0 = coords[i];
    const IntVec2& a1 = coords[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const IntVec2& b0 = coords[j];
      const IntVec2& b1 = coords[(j + 1) % n];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared endpoint: the other two endpoints must not lie on a common
        // ray from it (collinear overlap).
        const IntVec2& shared = (j == i + 1) ? coords[j] : coords[0];
        const IntVec2& first = (j == i + 1) ? a0 : a1;
        const IntVec2& second = (j == i + 1) ? b1 : b0;
        if (orient2d(shared, first, second) == 0 &&
            dot2(sub(first, shared), sub(second, shared)) > 0) {
          return false;
        }
      } else if (segments_intersect(a0, a1, b0, b1)) {
        return false;
      }
    }
  }
  return true;
}

PointLocation point_classify(std::span<const IntVec2> coords, const IntVec2& p) {
  std::vector<detail::Pt2<Int>> poly;
  poly.reserve(coords.size());
  for (const IntVec2& c : coords) poly.push_back(pt(c));
  switch (detail::classify<Int>(poly, pt(p))) {
    case detail::Where::Inside: return PointLocation::Inside;
    case detail::Where::Boundary: return PointLocation::Boundary;
    case detail::Where::Outside: return PointLocation::Outside;
  }
  return PointLocation::Outside;
}

Int shoelace_doubled(std::span<const IntVec2> coords) {
  Int acc = 0;
  const std::size_t n = coords.size();
  for (std::size_t i = 0; i < n; ++i) {
    const IntVec2& a = coords[i];
    const IntVec2& b = coords[(i + 1) % n];
    acc += a.u * b.w - b.u * a.w;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const IntVec2& p) {
  return os << "(" << p.u << "," << p.w << ")";
}

}  // namespace pick3d
