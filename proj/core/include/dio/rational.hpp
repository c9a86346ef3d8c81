#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision integers and rationals.
 *
 * Everything downstream does exact arithmetic on these two types. A
 * Rational is always canonical: denominator positive, gcd(|num|, den) = 1,
 * zero represented as 0/1. GMP maintains that form for us; the helpers
 * here add construction, parsing and decimal rendering.
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace dio {

using Int = mpz_class;
using Rational = mpq_class;

/// Canonical rational from a numerator/denominator pair. Throws
/// std::domain_error on zero denominator.
Rational make_rational(const Int& num, const Int& den);

inline Rational make_rational(long num, long den) {
    return make_rational(Int(num), Int(den));
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// floor(x) as an integer.
Int floor_int(const Rational& x);

/// ceil(x) as an integer.
Int ceil_int(const Rational& x);

/// Distance from x to the nearest integer, in [0, 1/2].
Rational nearest_int_dist(const Rational& x);

/// floor(x * 2^bits): the directed dyadic truncation used by the
/// fixed-point evaluation paths.
Int floor_scaled(const Rational& x, long bits);

/// ceil(x * 2^bits).
Int ceil_scaled(const Rational& x, long bits);

/// 2^bits as an Int (bits >= 0).
Int pow2(long bits);

/// Exact "num/den" rendering (den omitted when 1).
std::string to_fraction_string(const Rational& r);

/// Decimal rendering with the given number of significant digits,
/// round-to-nearest. Deterministic; for human convenience only.
std::string to_decimal_string(const Rational& r, int significant_digits = 15);

/// Parses "123", "-4/7" or a plain decimal like "0.618" into an exact
/// Rational. Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

}  // namespace dio
