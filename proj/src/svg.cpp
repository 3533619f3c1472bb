#include "pick3d/svg.hpp"

#include <algorithm>

#include "pick3d/counting.hpp"

namespace pick3d {

namespace {

const Int kScale = 32;
const Int kMargin = 48;

struct Mapper {
  Int u_lo, w_hi;

  Int x(const Int& u) const { return kMargin + kScale * (u - u_lo); }
  Int y(const Int& w) const { return kMargin + kScale * (w_hi - w); }
};

void circle(std::string& out, const Int& cx, const Int& cy, const char* r,
            const char* cls, const char* style) {
  out += "  <circle class=\"" + std::string(cls) + "\" cx=\"" + to_string(cx) +
         "\" cy=\"" + to_string(cy) + "\" r=\"" + r + "\" " + style + "/>\n";
}

}  // namespace

std::string render_svg(const LatticePolygon& P) {
  PlaneLattice L = kernel_basis(P.normal());
  Chart2D chart = lattice_chart(P, L);

  Int u_lo = chart.coords[0].u, u_hi = chart.coords[0].u;
  Int w_lo = chart.coords[0].w, w_hi = chart.coords[0].w;
  for (const IntVec2& c : chart.coords) {
    u_lo = std::min(u_lo, c.u);
    u_hi = std::max(u_hi, c.u);
    w_lo = std::min(w_lo, c.w);
    w_hi = std::max(w_hi, c.w);
  }
  Mapper map{u_lo, w_hi};
  Int width = 2 * kMargin + kScale * (u_hi - u_lo);
  Int height = 2 * kMargin + kScale * (w_hi - w_lo) + 40;  // caption strip

  PickCounts counts{interior_count_bruteforce(P, L), boundary_count(P)};

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         to_string(width) + "\" height=\"" + to_string(height) + "\" viewBox=\"0 0 " +
         to_string(width) + " " + to_string(height) + "\">\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Lattice grid of the bounding box (skipped for large boxes).
  if ((u_hi - u_lo) <= 64 && (w_hi - w_lo) <= 64) {
    for (Int u = u_lo; u <= u_hi; ++u) {
      for (Int w = w_lo; w <= w_hi; ++w) {
        circle(out, map.x(u), map.y(w), "2", "grid-point", "fill=\"#c8c8c8\"");
      }
    }
  }

  out += "  <polygon class=\"polygon\" points=\"";
  for (std::size_t i = 0; i < chart.coords.size(); ++i) {
    if (i) out += ' ';
    out += to_string(map.x(chart.coords[i].u)) + "," + to_string(map.y(chart.coords[i].w));
  }
  out += "\" fill=\"#e8eef7\" stroke=\"#1f3a66\" stroke-width=\"3\"/>\n";

  for (const IntVec2& p : boundary_points_in_chart(chart)) {
    circle(out, map.x(p.u), map.y(p.w), "6", "boundary-point",
           "fill=\"white\" stroke=\"#1f3a66\" stroke-width=\"3\"");
  }

  // Interior lattice points by exact classification over the bounding box.
  for (Int w = w_lo; w <= w_hi; ++w) {
    for (Int u = u_lo; u <= u_hi; ++u) {
      if (point_classify(chart.coords, IntVec2{u, w}) == PointLocation::Inside) {
        circle(out, map.x(u), map.y(w), "6", "interior-point", "fill=\"#c0392b\"");
      }
    }
  }

  out += "  <text x=\"" + to_string(kMargin) + "\" y=\"" +
         to_string(height - 20) +
         "\" font-family=\"monospace\" font-size=\"20\">I = " +
         to_string(counts.interior) + ", B = " + to_string(counts.boundary) +
         "</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace pick3d
