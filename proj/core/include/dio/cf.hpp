#pragma once

/**
 * @file cf.hpp
 * @brief Continued fractions: expansions, convergent matrices, certified
 *        interval evaluation, periodic limits.
 *
 * Conventions. An expansion is a₀ plus positive partial quotients
 * a₁, a₂, …; the matrix
 *
 *     M_n = (a₁ 1; 1 0)(a₂ 1; 1 0)…(a_n 1; 1 0) = (q_n q_{n−1}; p_n p_{n−1})
 *
 * has det (−1)^n, and p_n/q_n is the n-th convergent of the fractional
 * part [0; a₁, a₂, …]. M_n is symmetric exactly when a₁…a_n is a
 * palindrome, which is what makes palindromic prefixes give symmetric
 * matrices downstream.
 */

#include <dio/interval.hpp>
#include <dio/rational.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace dio {

struct ConvergentMatrix {
    // Layout (q  q_prev; p  p_prev): top row denominators, bottom row
    // numerators of [0; a_1..a_n].
    Int q = 1, q_prev = 0;
    Int p = 0, p_prev = 1;
    long index = 0;  // number of quotient factors multiplied in

    static ConvergentMatrix identity() { return {}; }

    /// Single quotient matrix (a 1; 1 0).
    static ConvergentMatrix quotient(const Int& a);

    /// Full 2x2 product (used by the triple recursion).
    ConvergentMatrix operator*(const ConvergentMatrix& o) const;

    /// Right-multiplication by (a 1; 1 0): the continuant step
    /// q_{n+1} = a q_n + q_{n−1}.
    ConvergentMatrix step(const Int& a) const;

    Int det() const { return q * p_prev - q_prev * p; }

    /// Matrix symmetry q_{n−1} = p_n; equivalent to a₁…a_n palindromic.
    bool symmetric() const { return q_prev == p; }

    /// Value of the convergent a₀ + p_n/q_n.
    Rational value(const Int& a0 = Int(0)) const;
};

class CFExpansion {
  public:
    /// Finite expansion; normalizes a trailing quotient 1 away so every
    /// rational has one canonical form. Quotients must be >= 1.
    static CFExpansion finite(Int a0, std::vector<Int> quotients);

    /// Infinite expansion; gen(i) must return a_i >= 1 for i >= 1.
    /// Quotients are generated on demand and cached.
    static CFExpansion infinite(Int a0, std::function<Int(std::size_t)> gen);

    const Int& integer_part() const { return a0_; }
    bool is_finite() const { return !gen_; }

    /// Number of partial quotients of a finite expansion; throws
    /// std::domain_error for infinite ones.
    std::size_t length() const;

    /// a_i for i >= 1; throws std::out_of_range past the end of a finite
    /// expansion.
    const Int& quotient(std::size_t i) const;

    /// min(want, length) for finite expansions, want otherwise.
    std::size_t available(std::size_t want) const;

    /// Exact value of a finite expansion; throws std::domain_error for
    /// infinite ones.
    Rational exact_value() const;

  private:
    CFExpansion() = default;

    Int a0_;
    mutable std::vector<Int> quotients_;
    std::function<Int(std::size_t)> gen_;  // null for finite expansions
};

struct PeriodicCF {
    // preperiod[0], when present, is the integer part a0; an empty
    // preperiod means a0 = 0. Entries after the first and all period
    // entries must be >= 1.
    std::vector<Int> preperiod;
    std::vector<Int> period;
};

/// Canonical expansion of r via the Euclidean algorithm (never ends in a
/// quotient 1, so expansions are unique).
CFExpansion cf_of_rational(const Rational& r);

/// M_1 … M_n. Throws std::out_of_range if a finite expansion has fewer
/// than n quotients.
std::vector<ConvergentMatrix> convergents(const CFExpansion& cf, std::size_t n);

/// Product matrix of the word under the letter assignment; symmetric()
/// iff the word is a palindrome. Throws std::invalid_argument on an empty
/// word, a letter missing from the assignment, or a non-positive value.
ConvergentMatrix word_matrix(const std::string& word, const std::map<char, Int>& assignment);

/// Certified bracket on the value: endpoints are the consecutive
/// convergents at `depth` and `depth−1`, so the width is exactly
/// 1/(q_depth · q_{depth−1}). A finite expansion evaluated at or beyond
/// its full depth gives the degenerate exact interval.
RatInterval cf_value_interval(const CFExpansion& cf, std::size_t depth);

/// Limit value of an eventually periodic expansion, enclosed to width <=
/// tolerance by evaluating ever deeper truncations. tolerance must be > 0.
RatInterval periodic_cf_value(const PeriodicCF& p, const Rational& tolerance);

/// The (infinite) expansion that cycles p.period after p.preperiod.
CFExpansion periodic_expansion(const PeriodicCF& p);

}  // namespace dio
