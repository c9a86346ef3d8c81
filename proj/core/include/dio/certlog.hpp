#pragma once

/**
 * @file certlog.hpp
 * @brief Certified natural logarithm and exponential on rational intervals.
 *
 * Exponent estimates are ratios of logarithms, so the enclosures here
 * must be honest: ln_interval(x, bits) returns an interval that provably
 * contains ln(t) for every t in x, with width controlled by `bits` plus
 * the relative width of x itself.
 *
 * Method: write t = m * 2^e with m in [3/4, 3/2); then
 * ln t = e*ln2 + 2*atanh(u), u = (m-1)/(m+1), |u| <= 1/5, and the atanh
 * series tail is bounded by |u|^(2K+1)/(2K+1) * 25/24. All partial sums
 * are evaluated in exact rational arithmetic and the tail bound is added
 * outward, so no rounding step is ever trusted.
 */

#include <dio/interval.hpp>

namespace dio {

/// Enclosure of ln over the positive interval x. Requires x.lo > 0;
/// throws std::domain_error otherwise. `bits` controls the series
/// truncation: the method error contributes at most 2^-bits per endpoint.
RatInterval ln_interval(const RatInterval& x, long bits = 96);

/// Enclosure of ln 2 with method error below 2^-bits.
RatInterval ln2_interval(long bits = 96);

/// Enclosure of exp over x. Intended for display-scale arguments
/// (Roy-type constants live in [-10, 10]); throws std::domain_error when
/// |x| > 64 to keep the reduction honest.
RatInterval exp_interval(const RatInterval& x, long bits = 96);

}  // namespace dio
