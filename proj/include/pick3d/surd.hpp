#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

#include "pick3d/numeric.hpp"

namespace pick3d {

/// Exact nonnegative value coeff * sqrt(radicand). The radicand is stored
/// exactly as given (typically a^2+b^2+c^2), never reduced to square-free
/// form; values with different radicands are compared through their squares,
/// so e.g. 2*sqrt(1) and 1*sqrt(4) are equal.
class SurdValue {
 public:
  SurdValue() : coeff_(0), radicand_(1) {}
  /// Requires coeff >= 0 and radicand >= 0.
  SurdValue(Rat coeff, Int radicand);

  static SurdValue zero() { return SurdValue(); }
  static SurdValue from_rational(const Rat& value);

  const Rat& coeff() const { return coeff_; }
  const Int& radicand() const { return radicand_; }
  bool is_zero() const { return coeff_ == 0 || radicand_ == 0; }

  /// Value times a nonnegative rational.
  SurdValue times(const Rat& factor) const;
  /// Value divided by a positive rational.
  SurdValue divided_by(const Rat& divisor) const;

  /// coeff^2 * radicand, the exact square of the value.
  Rat squared() const;

  std::string str() const;

 private:
  Rat coeff_;
  Int radicand_;
};

/// Exact order of the real values (squared comparison; no floating point).
std::weak_ordering surd_compare(const SurdValue& a, const SurdValue& b);

inline bool operator==(const SurdValue& a, const SurdValue& b) {
  return surd_compare(a, b) == std::weak_ordering::equivalent;
}
inline bool operator!=(const SurdValue& a, const SurdValue& b) { return !(a == b); }
inline bool operator<(const SurdValue& a, const SurdValue& b) {
  return surd_compare(a, b) == std::weak_ordering::less;
}
inline bool operator>(const SurdValue& a, const SurdValue& b) { return b < a; }

/// a / b as an exact rational when the quotient is rational (in particular
/// whenever the radicands are equal), std::nullopt otherwise or when b == 0.
std::optional<Rat> surd_ratio(const SurdValue& a, const SurdValue& b);

std::ostream& operator<<(std::ostream& os, const SurdValue& s);

}  // namespace pick3d
