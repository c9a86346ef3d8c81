#pragma once

#include <dio/interval.hpp>
#include <dio/rational.hpp>
#include <dio/xreal.hpp>

#include <cstdint>
#include <random>
#include <string>

namespace dio::test {

inline Rational rat(long n, long d = 1) { return make_rational(n, d); }

/// Deterministic RNG so property tests are reproducible run to run.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }

    Rational rational(long mag, bool nonzero = false) {
        for (;;) {
            Rational r = rat(pick(-mag, mag), pick(1, mag));
            if (!nonzero || r != 0) return r;
        }
    }

    RatInterval interval(long mag) {
        Rational a = rational(mag), b = rational(mag);
        return a <= b ? RatInterval(a, b) : RatInterval(b, a);
    }
};

/// |x - target| <= eps, everything exact. Targets and tolerances are
/// spelled as strings so no binary round-off sneaks into expectations.
inline bool near(const Rational& x, const std::string& target, const std::string& eps) {
    Rational t = rational_from_string(target);
    Rational e = rational_from_string(eps);
    return x >= t - e && x <= t + e;
}

/// Interval version: the whole enclosure lies within eps of target.
inline bool near(const RatInterval& x, const std::string& target, const std::string& eps) {
    Rational t = rational_from_string(target);
    Rational e = rational_from_string(eps);
    return x.lo >= t - e && x.hi <= t + e;
}

inline bool near(const XReal& x, const std::string& target, const std::string& eps) {
    return x.is_finite() && near(x.enclosure(), target, eps);
}

}  // namespace dio::test
