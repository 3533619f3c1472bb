#pragma once

#include <iosfwd>

#include "pick3d/numeric.hpp"

namespace pick3d {

/// Exact integer 3-vector: points of Z^3, normals and basis vectors alike.
struct IntVec3 {
  Int x{0};
  Int y{0};
  Int z{0};

  IntVec3() = default;
  IntVec3(Int x_, Int y_, Int z_)
      : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  bool operator==(const IntVec3&) const = default;

  IntVec3 operator+(const IntVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  IntVec3 operator-(const IntVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  IntVec3 operator-() const { return {-x, -y, -z}; }

  bool is_zero() const { return x == 0 && y == 0 && z == 0; }
};

inline IntVec3 operator*(const Int& s, const IntVec3& v) {
  return {s * v.x, s * v.y, s * v.z};
}

inline Int dot(const IntVec3& u, const IntVec3& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}

inline IntVec3 cross(const IntVec3& u, const IntVec3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

/// gcd of the components (the "content" of the vector).
inline Int content(const IntVec3& v) { return gcd3(v.x, v.y, v.z); }

std::ostream& operator<<(std::ostream& os, const IntVec3& v);

}  // namespace pick3d
