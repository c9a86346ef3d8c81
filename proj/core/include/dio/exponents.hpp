#pragma once

/**
 * @file exponents.hpp
 * @brief Finite-sample exponent estimation from minimal-point sequences.
 *
 * A record (H_i, eps_i) contributes the sample -ln eps_i / ln H_i to the
 * ordinary (limsup-type) exponent and -ln eps_i / ln H_{i+1} to the
 * uniform (liminf-type) one: the error eps_i is the best available
 * uniformly over heights in [H_i, H_{i+1}). The pointwise estimator takes
 * max/min of those samples; the slope estimator regresses ln eps on ln H,
 * which cancels the constant-factor bias pointwise samples carry at
 * finite height. All logarithms are certified enclosures, so estimates
 * are intervals, not floats.
 */

#include <dio/constructions.hpp>
#include <dio/oracle.hpp>
#include <dio/xreal.hpp>

#include <string>
#include <utility>
#include <vector>

namespace dio {

enum class EstimateMethod { pointwise, slope };

struct ExponentEstimate {
    XReal ordinary, uniform;
    EstimateMethod method = EstimateMethod::pointwise;
    long burn_in = 0;  // effective burn-in after clamping to the sample
    std::size_t sample_count = 0;
    std::pair<Int, Int> height_range;  // first/last retained height
};

/// Estimates from a minimal-point sequence. burn_in leading records are
/// dropped (clamped so at least two remain); fewer than two records is an
/// error. A certified exact-zero record makes the ordinary exponent +inf.
ExponentEstimate estimate_exponents(const MinimalPointSeq& seq, long burn_in,
                                    EstimateMethod method);

struct ExponentQuadruple {
    XReal v, v_prime, w, w_prime;  // row ordinary, column ordinary, row uniform, column uniform
    bool degenerate = false;       // some power of the base is exactly rational
    std::string note;
};

/// Runs the 1x2 power-row and 2x1 power-column searches up to Xmax and
/// bundles (row ordinary, column ordinary, row uniform, column uniform).
/// Systems with an exactly-rational power entry are flagged degenerate
/// and should be excluded from quadruple relations.
ExponentQuadruple exponent_quadruple(const RealEntry& xi, const Int& Xmax, long burn_in = 3,
                                     EstimateMethod method = EstimateMethod::pointwise,
                                     const OracleConfig& cfg = {});

/// min{d-1, n}: the common value of the four exponents for an algebraic
/// number of degree d. Requires d >= 2, n >= 1.
XReal algebraic_expected(long d, long n);

/// (u - 2 - u^(1-n))/(u - 1) where u is the largest real root of
/// X^(n-1) - X^(n-2) - sum_{k=0}^{n-2} X^k, located by exact bisection;
/// result width <= tolerance. n = 2 gives exactly -1/2.
RatInterval theorem4_bound(long n, const Rational& tolerance);

/// Reinterprets symmetric triples as simultaneous-approximation records:
/// height x0, vector (x0), approximations (x1, x2), error
/// max(|x0 xi - x1|, |x0 xi^2 - x2|) with xi bracketed by the deepest
/// triple's convergent ratios. The deepest triple is consumed for the
/// bracket, so records cover all triples but the last. The result is a
/// subsequence of the true minimal points (deep but not exhaustive),
/// which is exactly what the uniform estimators need.
MinimalPointSeq triples_as_minimal_points(const std::vector<MinimalTriple>& triples);

}  // namespace dio
