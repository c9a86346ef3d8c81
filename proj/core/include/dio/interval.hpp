#pragma once

/**
 * @file interval.hpp
 * @brief Closed rational intervals with outward-rounded operations.
 *
 * RatInterval is the workhorse of every certified computation: each
 * operation returns an interval guaranteed to contain the exact image of
 * the inputs. Endpoints are exact rationals, so plain +,-,*,/ on
 * intervals are themselves exact; outward rounding only enters when an
 * interval is deliberately coarsened to dyadic endpoints to keep bit
 * sizes bounded (see round_outward).
 */

#include <dio/rational.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace dio {

struct RatInterval {
    Rational lo;
    Rational hi;

    RatInterval() : lo(0), hi(0) {}
    explicit RatInterval(const Rational& point) : lo(point), hi(point) {}
    RatInterval(const Rational& lo_, const Rational& hi_);

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const RatInterval& other) const {
        return lo <= other.lo && other.hi <= hi;
    }
    bool intersects(const RatInterval& other) const {
        return lo <= other.hi && other.lo <= hi;
    }

    /// Sign certificate: +1 if lo > 0, -1 if hi < 0, 0 if the interval
    /// straddles (or touches) zero.
    int sign() const;

    RatInterval operator-() const { return RatInterval(-hi, -lo); }
    RatInterval operator+(const RatInterval& o) const;
    RatInterval operator-(const RatInterval& o) const;
    RatInterval operator*(const RatInterval& o) const;
    /// Throws std::domain_error if o contains zero.
    RatInterval operator/(const RatInterval& o) const;

    RatInterval operator+(const Rational& c) const { return *this + RatInterval(c); }
    RatInterval operator-(const Rational& c) const { return *this - RatInterval(c); }
    RatInterval operator*(const Rational& c) const { return *this * RatInterval(c); }
    RatInterval operator/(const Rational& c) const { return *this / RatInterval(c); }

    /// 1/x. Throws std::domain_error if the interval contains zero.
    RatInterval reciprocal() const;

    /// |x| as an interval.
    RatInterval abs() const;

    /// Coarsen to dyadic endpoints lo' = floor(lo*2^bits)/2^bits,
    /// hi' = ceil(hi*2^bits)/2^bits. Always a superset of *this.
    RatInterval round_outward(long bits) const;
};

/// Smallest interval containing both arguments.
RatInterval hull(const RatInterval& a, const RatInterval& b);

/// Intersection; throws std::domain_error when the intervals are disjoint.
RatInterval intersect(const RatInterval& a, const RatInterval& b);

/// x^k with exponent k >= 0 (k = 0 gives the point interval [1,1]).
/// Even powers of straddling intervals are clamped at zero from below.
RatInterval interval_pow(const RatInterval& x, unsigned k);

/// sum_i coeffs[i] * xs[i]; the two spans must have equal length.
RatInterval interval_linear_form(const std::vector<Rational>& coeffs,
                                 const std::vector<RatInterval>& xs);

/// Interval enclosure of dist(x, Z) = min_{n in Z} |x - n| over all x in
/// the input. Result is contained in [0, 1/2].
RatInterval interval_nearest_int_dist(const RatInterval& x);

/// Certified comparison: -1 if a < b for all points, +1 if a > b for all
/// points, std::nullopt when the intervals overlap (undecidable at this
/// resolution).
std::optional<int> three_way_compare(const RatInterval& a, const RatInterval& b);

/// Enclosure of sqrt(x). Requires x.lo >= 0; throws std::domain_error
/// otherwise. Endpoints are dyadic with the requested precision: the
/// result has width at most 2^-bits + the unavoidable interval width.
RatInterval sqrt_interval(const RatInterval& x, long bits);

/// Enclosure of sqrt(n) for an integer n >= 0, width <= 2^-bits.
/// Exact point interval when n is a perfect square.
RatInterval sqrt_interval(const Int& n, long bits);

}  // namespace dio
