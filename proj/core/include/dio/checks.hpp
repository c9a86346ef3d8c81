#pragma once

/**
 * @file checks.hpp
 * @brief Registry of certified relation checks and the target-level suite.
 *
 * Every check reduces its inputs to rational intervals and returns a
 * three-valued verdict. Two semantics, chosen by tolerance:
 *
 *  - tolerance mode (estimate inputs; active whenever the registry entry
 *    declares a default tolerance or the caller passes one): holds iff
 *    the margin is certified >= -tolerance, otherwise inconclusive.
 *    Never fails: a finite-height estimate cannot certify that a
 *    limsup/liminf relation is violated.
 *  - exact mode (symbolic or enclosure inputs, no tolerance):
 *    satisfiability on the input boxes — fails iff the relation is
 *    certifiably violated for every point of the boxes, holds otherwise.
 *    Refining enclosures of values that truly satisfy the relation can
 *    therefore never flip holds to fails.
 *
 * Declared infinity conventions (w = +inf forces w' = 1; v = +inf turns
 * the sandwich into the one-sided bound v' >= w - 1, and v' = +inf when
 * moreover w = +inf) are applied before any interval arithmetic; the
 * result note records every such reduction.
 */

#include <dio/constructions.hpp>
#include <dio/exponents.hpp>
#include <dio/oracle.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dio {

enum class CheckStatus { holds, fails, inconclusive };

const char* to_string(CheckStatus s);

struct CheckSpec {
    std::string id;
    std::string relation;        // the relation being checked, in plain terms
    bool estimate_based = false; // a tolerance applies by default
    Rational default_tolerance;  // 0 for exact-mode checks
};

/// The full registry, in fixed order. Each id appears exactly once.
const std::vector<CheckSpec>& check_registry();

/// Lookup by id; throws std::out_of_range for unknown ids.
const CheckSpec& check_spec(const std::string& id);

/**
 * Inputs for run_check. Scalar names by id:
 *   dirichlet_lower    omega; dims n, m
 *   jarnik_col         omega, omega_hat
 *   jarnik_two_cols    omega, omega_hat
 *   dyson_transfer     left (= omega of A), right (= omega of tA); n, m
 *   apfelbeck_transfer left, right (uniform exponents); n, m
 *   jarnik_identity    w, w_prime
 *   thm7_sandwich      v, v_prime, w
 *   thm7_admissible    w, w_prime [, v, v_prime]
 *   thm8_transfer      v, v_prime, w, w_prime; m
 *   algebraic_eq12     estimate; d, n
 *   thm11_general      lambda_hat and/or w_hat; n
 *   thm11_n2           lambda_hat and/or w_hat
 *   lambda_sandwich    lambda, w1, wn; n
 *   thm13_relation     lambda2, w2, w2_hat
 * Structured inputs: triples (hankel_nonzero, roy_system_16), seq + xmax
 * (roy_system_15), seq + xi + n (thm10_poly_bound), growth (+ n for the
 * exponent row) for limit_19 / growth_20.
 */
struct CheckInputs {
    std::map<std::string, XReal> scalars;
    std::optional<Rational> tolerance;  // overrides the registry default
    std::string instance;               // label echoed into the result
    long n = 0, m = 0, d = 0;

    std::vector<MinimalTriple> triples;
    std::optional<MinimalPointSeq> seq;
    std::optional<RatInterval> xi;
    std::optional<Int> xmax;
    std::optional<GrowthStats> growth;
};

struct CheckResult {
    std::string id;
    std::string instance;
    CheckStatus status = CheckStatus::inconclusive;
    // Certified enclosures of the two sides after convention reduction,
    // and of the margin (worst margin for multi-part checks). For
    // trivially-satisfied reductions the sides echo [0,0] and the note
    // explains.
    RatInterval lhs, rhs, slack;
    std::string note;
};

/// Evaluates one registry check. Throws std::out_of_range for unknown
/// ids and std::invalid_argument on schema mismatch.
CheckResult run_check(const std::string& id, const CheckInputs& inputs);

/// What the suite is pointed at. Construction-time validation only; the
/// suite decides applicability from the kind.
struct TargetDescriptor {
    enum class Kind { rational, square_root, finite_cf, extremal, periodic };

    Kind kind = Kind::rational;
    Rational rat;                // rational
    Int sqrt_n;                  // square_root (any n >= 2; squares detected later)
    Int cf_a0;                   // finite_cf
    std::vector<Int> cf_terms;   //   "
    Int fib_a, fib_b;            // extremal
    PeriodicCF periodic;         // periodic

    static TargetDescriptor rational_of(Rational r);
    static TargetDescriptor square_root(Int n);
    static TargetDescriptor finite_cf_of(Int a0, std::vector<Int> terms);
    static TargetDescriptor extremal(Int a, Int b);
    static TargetDescriptor eventually_periodic(PeriodicCF p);
};

struct SuiteConfig {
    Rational tol_ordinary = Rational(1, 20);  // ordinary-exponent estimates
    Rational tol_uniform = Rational(3, 100);  // uniform-exponent estimates
    long burn_in = 3;
    long triple_depth = 25;       // extremal targets: triples to this index
    long growth_depth = 30;       // extremal targets: growth rows to this n
    long growth_exponent_row = 25;  // row checked by growth_20
    OracleConfig oracle;
};

struct SuiteReport {
    std::vector<CheckResult> results;  // sorted by (id, instance)
    bool rational_target = false;
    std::vector<std::string> notes;
};

/// Runs every applicable registry check for the target, wiring
/// enumeration -> estimation -> checks. Per-check failures (including
/// precision ceilings) become inconclusive results with the error in the
/// note; the suite itself does not abort. Rational targets (including
/// finite expansions) short-circuit with the rational flag set.
SuiteReport run_suite(const TargetDescriptor& target, const Int& Xmax,
                      const SuiteConfig& config = {});

}  // namespace dio
