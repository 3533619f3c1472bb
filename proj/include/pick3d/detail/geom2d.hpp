#pragma once

#include <cstdint>
#include <vector>

namespace pick3d::detail {

// Shared exact 2-D kernels, instantiated with Int for the public predicates
// and with int64_t (products in __int128) for the narrowed counting loop.
// For int64_t inputs the caller guarantees |coordinate| < 2^31, which keeps
// every difference below 2^32 and every product below 2^64 in magnitude.

template <class S>
struct WideOf {
  using type = S;
};

template <>
struct WideOf<std::int64_t> {
  using type = __int128;
};

template <class S>
struct Pt2 {
  S u;
  S w;
};

template <class S>
int orient(const Pt2<S>& a, const Pt2<S>& b, const Pt2<S>& c) {
  using W = typename WideOf<S>::type;
  W det = W(b.u - a.u) * W(c.w - a.w) - W(b.w - a.w) * W(c.u - a.u);
  if (det > 0) return 1;
  if (det < 0) return -1;
  return 0;
}

template <class S>
bool on_closed_segment(const Pt2<S>& a, const Pt2<S>& b, const Pt2<S>& p) {
  if (orient(a, b, p) != 0) return false;
  const S& lo_u = a.u < b.u ? a.u : b.u;
  const S& hi_u = a.u < b.u ? b.u : a.u;
  const S& lo_w = a.w < b.w ? a.w : b.w;
  const S& hi_w = a.w < b.w ? b.w : a.w;
  return lo_u <= p.u && p.u <= hi_u && lo_w <= p.w && p.w <= hi_w;
}

enum class Where { Inside, Boundary, Outside };

// Exact even-odd classification. The +u ray crossing rule is half-open in w
// ((a.w > p.w) != (b.w > p.w)), so vertices at ray height are counted once
// and horizontal edges never; points on the boundary are caught first.
template <class S>
Where classify(const std::vector<Pt2<S>>& poly, const Pt2<S>& p) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Pt2<S>& a = poly[i];
    const Pt2<S>& b = poly[(i + 1) % n];
    if (on_closed_segment(a, b, p)) return Where::Boundary;
  }
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Pt2<S>& a = poly[i];
    const Pt2<S>& b = poly[(i + 1) % n];
    bool above_a = a.w > p.w;
    bool above_b = b.w > p.w;
    if (above_a == above_b) continue;
    // Crossing is strictly right of p iff orient(a,b,p) has the sign of
    // (b.w - a.w); orient == 0 cannot happen here (p would be on the edge).
    int o = orient(a, b, p);
    int dir = b.w > a.w ? 1 : -1;
    if (o == dir) inside = !inside;
  }
  return inside ? Where::Inside : Where::Outside;
}

}  // namespace pick3d::detail
