#include "pick3d/vec3.hpp"

#include <ostream>

namespace pick3d {

std::ostream& operator<<(std::ostream& os, const IntVec3& v) {
  return os << "(" << v.x << "," << v.y << "," << v.z << ")";
}

}  // namespace pick3d
