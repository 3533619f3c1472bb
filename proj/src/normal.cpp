#include "pick3d/normal.hpp"

#include <ostream>

#include "pick3d/errors.hpp"

namespace pick3d {

Normal primitive_normal(const IntVec3& v) {
  if (v.is_zero()) fail(Errc::ZeroVector, "primitive_normal of (0,0,0)");
  Int g = content(v);
  IntVec3 w{v.x / g, v.y / g, v.z / g};
  const Int& lead = w.x != 0 ? w.x : (w.y != 0 ? w.y : w.z);
  if (lead < 0) w = -w;
  return Normal(std::move(w));
}

std::string Normal::str() const {
  return "(" + to_string(v_.x) + "," + to_string(v_.y) + "," + to_string(v_.z) + ")";
}

std::ostream& operator<<(std::ostream& os, const Normal& n) {
  return os << n.str();
}

}  // namespace pick3d
