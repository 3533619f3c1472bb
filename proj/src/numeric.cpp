#include "pick3d/numeric.hpp"

#include <cctype>
#include <stdexcept>

#include "pick3d/errors.hpp"

namespace pick3d {

Int gcd3(const Int& a, const Int& b, const Int& c) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

int sign_of(const Int& v) { return sgn(v); }
int sign_of(const Rat& v) { return sgn(v); }

bool is_perfect_square(const Int& v) {
  if (v < 0) return false;
  return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

std::optional<Int> exact_sqrt(const Int& v) {
  if (v < 0) return std::nullopt;
  Int root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return root;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Int int_from_string(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) fail(Errc::ParseError, "not an integer: '" + text + "'");
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      fail(Errc::ParseError, "not an integer: '" + text + "'");
  }
  return Int(text, 10);
}

Rat rat_from_string(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(text));
  Int num = int_from_string(text.substr(0, slash));
  Int den = int_from_string(text.substr(slash + 1));
  if (den == 0) fail(Errc::ParseError, "zero denominator: '" + text + "'");
  return make_rat(num, den);
}

bool fits_json_number(const Int& v) {
  static const Int kLimit = Int(1) << 53;  // 2^53
  return v > -kLimit && v < kLimit;
}

}  // namespace pick3d
