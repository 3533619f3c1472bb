#pragma once

#include <iosfwd>

#include "pick3d/vec3.hpp"

namespace pick3d {

/// Primitive integer plane normal (a,b,c): not all zero, gcd 1, and the
/// first nonzero component positive. Defines the plane a*x + b*y + c*z = d.
class Normal {
 public:
  const Int& a() const { return v_.x; }
  const Int& b() const { return v_.y; }
  const Int& c() const { return v_.z; }

  const IntVec3& vec() const { return v_; }
  Int norm_sq() const { return dot(v_, v_); }

  bool operator==(const Normal&) const = default;

  std::string str() const;

 private:
  friend Normal primitive_normal(const IntVec3& v);
  explicit Normal(IntVec3 v) : v_(std::move(v)) {}
  IntVec3 v_;
};

/// Divides out the gcd and orients so the first nonzero component is
/// positive. Throws ZeroVector for (0,0,0).
Normal primitive_normal(const IntVec3& v);

std::ostream& operator<<(std::ostream& os, const Normal& n);

}  // namespace pick3d
