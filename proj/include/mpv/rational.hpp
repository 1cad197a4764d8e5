#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mpv {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with positive denominator and gcd(|num|, den) = 1; cpp_rational
// maintains both invariants canonically.
using Rational = boost::multiprecision::cpp_rational;

// n/d with the sign moved to the numerator (the boost two-argument constructor
// rejects negative denominators). Throws InversionOfZero when d = 0.
Rational make_rational(BigInt n, BigInt d);

// 1/r; throws InversionOfZero on 0.
Rational rational_inverse(const Rational& r);

// Parses "p", "-p", "p/q" (optional whitespace at the ends). Throws SyntaxError.
Rational parse_rational(std::string_view text);

// "p" or "p/q"; denominator omitted when 1.
std::string rational_string(const Rational& r);

// base^e for any integer e; throws PoleAtPoint when base = 0 and e < 0.
Rational rational_pow(const Rational& base, std::int64_t e);

// Exact n-th root when one exists (n >= 1).
std::optional<Rational> rational_nth_root(const Rational& x, unsigned n);

// r*m as an integer; nullopt when the denominator of r does not divide m.
std::optional<std::int64_t> scaled_integer(const Rational& r, std::int64_t m);

} // namespace mpv
