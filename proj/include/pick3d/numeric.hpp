#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace pick3d {

/// Arbitrary-precision integer and rational. Every quantity in the library
/// is one of these (or built from them); nothing is ever rounded.
using Int = mpz_class;
using Rat = mpq_class;

/// gcd(|a|,|b|,|c|); gcd3(0,0,0) == 0.
Int gcd3(const Int& a, const Int& b, const Int& c);

/// num/den reduced to lowest terms with positive denominator.
Rat make_rat(const Int& num, const Int& den);

bool is_integer(const Rat& r);

int sign_of(const Int& v);
int sign_of(const Rat& v);

bool is_perfect_square(const Int& v);
std::optional<Int> exact_sqrt(const Int& v);

std::string to_string(const Int& v);
/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rat& v);

/// Strict decimal integer parse ([+-]?digits). Throws ParseError.
Int int_from_string(const std::string& text);
/// Parses "p" or "p/q" (q != 0). Throws ParseError.
Rat rat_from_string(const std::string& text);

/// |v| < 2^53, i.e. representable exactly as a JSON number by any
/// double-based reader.
bool fits_json_number(const Int& v);

}  // namespace pick3d
