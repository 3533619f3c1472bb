#include "pick3d/counting.hpp"

#include <algorithm>
#include <cstdint>

#include "pick3d/detail/geom2d.hpp"
#include "pick3d/errors.hpp"

namespace pick3d {

namespace {

struct ChartBox {
  Int u_lo, u_hi, w_lo, w_hi;
};

ChartBox bounding_box(const std::vector<IntVec2>& coords) {
  ChartBox box{coords[0].u, coords[0].u, coords[0].w, coords[0].w};
  for (const IntVec2& c : coords) {
    box.u_lo = std::min(box.u_lo, c.u);
    box.u_hi = std::max(box.u_hi, c.u);
    box.w_lo = std::min(box.w_lo, c.w);
    box.w_hi = std::max(box.w_hi, c.w);
  }
  return box;
}

// int64 is safe for the narrowed loop as long as every coordinate the
// predicates ever see stays below 2^31 in magnitude.
const Int kNarrowBound = Int(1) << 31;

bool narrowable(const std::vector<IntVec2>& coords, const Int& w_lo, const Int& w_hi) {
  auto ok = [](const Int& v) { return v > -kNarrowBound && v < kNarrowBound; };
  if (!ok(w_lo) || !ok(w_hi)) return false;
  for (const IntVec2& c : coords) {
    if (!ok(c.u) || !ok(c.w)) return false;
  }
  return true;
}

Int count_rows_narrow(const std::vector<IntVec2>& coords, const Int& w_lo,
                      const Int& w_hi) {
  std::vector<detail::Pt2<std::int64_t>> poly;
  poly.reserve(coords.size());
  std::int64_t u_lo = 0, u_hi = 0;
  bool first = true;
  for (const IntVec2& c : coords) {
    std::int64_t u = c.u.get_si();
    std::int64_t w = c.w.get_si();
    poly.push_back({u, w});
    u_lo = first ? u : std::min(u_lo, u);
    u_hi = first ? u : std::max(u_hi, u);
    first = false;
  }
  long long count = 0;
  for (std::int64_t w = w_lo.get_si(); w <= w_hi.get_si(); ++w) {
    for (std::int64_t u = u_lo; u <= u_hi; ++u) {
      if (detail::classify<std::int64_t>(poly, {u, w}) == detail::Where::Inside) ++count;
    }
  }
  return Int(static_cast<long>(count));
}

Int count_rows_exact(const std::vector<IntVec2>& coords, const Int& w_lo,
                     const Int& w_hi) {
  std::vector<detail::Pt2<Int>> poly;
  poly.reserve(coords.size());
  Int u_lo, u_hi;
  bool first = true;
  for (const IntVec2& c : coords) {
    poly.push_back({c.u, c.w});
    u_lo = first ? c.u : std::min(u_lo, c.u);
    u_hi = first ? c.u : std::max(u_hi, c.u);
    first = false;
  }
  Int count = 0;
  for (Int w = w_lo; w <= w_hi; ++w) {
    for (Int u = u_lo; u <= u_hi; ++u) {
      if (detail::classify<Int>(poly, {u, w}) == detail::Where::Inside) ++count;
    }
  }
  return count;
}

}  // namespace

Int segment_interior_count(const IntVec3& p, const IntVec3& q) {
  if (p == q) fail(Errc::DegenerateSegment, "segment endpoints coincide");
  return content(q - p) - 1;
}

Int boundary_count(const LatticePolygon& P) {
  const std::vector<IntVec3>& vs = P.vertices();
  const std::size_t n = vs.size();
  Int b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    b += content(vs[(i + 1) % n] - vs[i]);
  }
  return b;
}

Int interior_count_in_rows(const Chart2D& chart, const Int& w_lo, const Int& w_hi) {
  if (w_lo > w_hi) return Int(0);
  if (narrowable(chart.coords, w_lo, w_hi)) {
    return count_rows_narrow(chart.coords, w_lo, w_hi);
  }
  return count_rows_exact(chart.coords, w_lo, w_hi);
}

Int interior_count_bruteforce(const LatticePolygon& P, const PlaneLattice& L) {
  Chart2D chart = lattice_chart(P, L);
  ChartBox box = bounding_box(chart.coords);
  return interior_count_in_rows(chart, box.w_lo, box.w_hi);
}

Int interior_count_fast(const LatticePolygon& P, const PlaneLattice& L) {
  Chart2D chart = lattice_chart(P, L);
  Int doubled = abs(shoelace_doubled(chart.coords));
  Int b = boundary_count(P);
  // I = A - B/2 + 1 = (2A - B + 2)/2.
  Int twice_i = doubled - b + 2;
  if (mpz_odd_p(twice_i.get_mpz_t()))
    fail(Errc::InternalInconsistency, "Pick inversion produced a half-integer");
  Int i = twice_i / 2;
  if (i < 0) fail(Errc::InternalInconsistency, "Pick inversion produced a negative count");
  return i;
}

Rat pick_value(const PickCounts& counts) {
  return Rat(counts.interior) + make_rat(counts.boundary, Int(2)) - 1;
}

PickCounts oracle_counts(const LatticePolygon& P, const PlaneLattice& L) {
  return PickCounts{interior_count_bruteforce(P, L), boundary_count(P)};
}

std::vector<IntVec2> boundary_points_in_chart(const Chart2D& chart) {
  std::vector<IntVec2> points;
  const std::size_t n = chart.coords.size();
  for (std::size_t i = 0; i < n; ++i) {
    const IntVec2& p = chart.coords[i];
    const IntVec2& q = chart.coords[(i + 1) % n];
    Int du = q.u - p.u, dw = q.w - p.w;
    Int g = gcd3(du, dw, Int(0));
    Int su = du / g, sw = dw / g;
    for (Int k = 0; k < g; ++k) {
      points.push_back(IntVec2{p.u + k * su, p.w + k * sw});
    }
  }
  return points;
}

}  // namespace pick3d
