#pragma once

/**
 * @file constructions.hpp
 * @brief Extremal numbers xi_{a,b}, their minimal triples, growth
 *        statistics, and the sigma-parametrized exponent quadruple.
 *
 * xi_{a,b} = [0; a, b, a, a, b, a, ...] reads its partial quotients off
 * the Fibonacci word. The symmetric convergent matrices of the
 * palindromic prefixes give integer triples (x0, x1, x2) = (Q_n, ...)
 * satisfying a three-term matrix recursion; their unimodularity
 * |x1^2 - x0 x2| = 1 is what drives the simultaneous-approximation
 * behaviour measured elsewhere in this library.
 */

#include <dio/cf.hpp>
#include <dio/interval.hpp>
#include <dio/xreal.hpp>

#include <vector>

namespace dio {

struct ExtremalSpec {
    Int a, b;

    /// Requires a, b >= 1 and a != b.
    ExtremalSpec(Int a_, Int b_);
};

struct MinimalTriple {
    long n = 0;
    Int x0, x1, x2;  // symmetric matrix (x0 x1; x1 x2); x0 = Q_n

    Int hankel() const { return x1 * x1 - x0 * x2; }
};

struct SigmaSpec {
    // Eventually periodic positive sequence (s_j): preperiod then period
    // repeated forever. The liminf of the reversed-prefix values does not
    // depend on the preperiod, so only the period enters the computation.
    std::vector<Int> preperiod;
    std::vector<Int> period;  // nonempty, entries >= 1
};

struct ExponentQuadrupleT13 {
    XReal lambda2, w2, lambda2_hat, w2_hat;
};

/// The expansion [0; a, b, a, a, b, a, ...] (lazily generated).
CFExpansion xi_ab_cf(const ExtremalSpec& spec);

/// xi_{a,b} as a certified interval, bracketed by consecutive
/// convergents at `depth`.
RatInterval xi_ab_value(const ExtremalSpec& spec, std::size_t depth = 64);

/// Triples for n = 2..N (N >= 2). Base cases are the convergent matrices
/// of the palindromic prefixes "a" and "aba"; later entries follow
/// A_n = A_{n-1} * S_n * A_{n-2} with S_n the two-letter quotient matrix
/// "ab" for even n and "ba" for odd n.
std::vector<MinimalTriple> triple_sequence(const ExtremalSpec& spec, long N);

struct GrowthRow {
    long n = 0;
    RatInterval ratio_19;     // exact Q_n/(Q_{n-1} Q_{n-2})
    RatInterval exponent_20;  // certified bounds on log Q_{n+1} / log Q_n
};

struct GrowthStats {
    std::vector<GrowthRow> rows;  // n = 4..N
    RatInterval ratio_limit;      // xi^2 + (a+b) xi + (ab+1)
};

/// Growth diagnostics for n = 4..N (N >= 4): the exact ratio
/// Q_n/(Q_{n-1}Q_{n-2}) converging to xi^2 + (a+b)xi + (ab+1), and
/// certified log-ratio bounds approaching (1+sqrt 5)/2.
GrowthStats growth_stats(const ExtremalSpec& spec, long N);

/// sigma = liminf_k [0; s_k, s_{k-1}, ..., s_1] for the eventually
/// periodic sequence: the minimum over all rotations of the reversed
/// period, each evaluated as a purely periodic value. Result width <=
/// tolerance (> 0 required).
RatInterval sigma_of(const SigmaSpec& spec, const Rational& tolerance);

/// The quadruple (1, 1 + 2/sigma, (1+sigma)/(2+sigma), 2 + sigma) for
/// sigma inside (0, 1]; also verifies the internal relation
/// lambda2 = w2(w2_hat - 1)/(w2 + w2_hat) on the computed intervals.
ExponentQuadrupleT13 theorem13_exponents(const RatInterval& sigma);

}  // namespace dio
