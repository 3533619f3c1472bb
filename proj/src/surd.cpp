#include "pick3d/surd.hpp"

#include <ostream>
#include <stdexcept>

namespace pick3d {

SurdValue::SurdValue(Rat coeff, Int radicand)
    : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
  if (coeff_ < 0) throw std::invalid_argument("SurdValue: negative coefficient");
  if (radicand_ < 0) throw std::invalid_argument("SurdValue: negative radicand");
}

SurdValue SurdValue::from_rational(const Rat& value) {
  return SurdValue(value, Int(1));
}

SurdValue SurdValue::times(const Rat& factor) const {
  if (factor < 0) throw std::invalid_argument("SurdValue::times: negative factor");
  return SurdValue(coeff_ * factor, radicand_);
}

SurdValue SurdValue::divided_by(const Rat& divisor) const {
  if (divisor <= 0) throw std::invalid_argument("SurdValue::divided_by: divisor must be positive");
  return SurdValue(coeff_ / divisor, radicand_);
}

Rat SurdValue::squared() const {
  Rat s = coeff_ * coeff_;
  return s * Rat(radicand_);
}

std::string SurdValue::str() const {
  if (is_zero()) return "0";
  if (radicand_ == 1) return to_string(coeff_);
  if (coeff_ == 1) return "sqrt(" + to_string(radicand_) + ")";
  return to_string(coeff_) + "*sqrt(" + to_string(radicand_) + ")";
}

std::weak_ordering surd_compare(const SurdValue& a, const SurdValue& b) {
  bool az = a.is_zero(), bz = b.is_zero();
  if (az && bz) return std::weak_ordering::equivalent;
  if (az) return std::weak_ordering::less;
  if (bz) return std::weak_ordering::greater;
  // Both positive: compare squares.
  int c = cmp(a.squared(), b.squared());
  if (c < 0) return std::weak_ordering::less;
  if (c > 0) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

std::optional<Rat> surd_ratio(const SurdValue& a, const SurdValue& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Rat(0);
  if (a.radicand() == b.radicand()) return Rat(a.coeff() / b.coeff());
  // (a/b)^2 must be the square of a rational.
  Rat q2 = a.squared() / b.squared();
  std::optional<Int> num = exact_sqrt(q2.get_num());
  std::optional<Int> den = exact_sqrt(q2.get_den());
  if (!num || !den) return std::nullopt;
  return make_rat(*num, *den);
}

std::ostream& operator<<(std::ostream& os, const SurdValue& s) {
  return os << s.str();
}

}  // namespace pick3d
