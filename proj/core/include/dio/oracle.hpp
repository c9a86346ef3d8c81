#pragma once

/**
 * @file oracle.hpp
 * @brief Exhaustive certified best-approximation search.
 *
 * A TargetSystem is an n x m matrix A of refinable real entries. For an
 * integer vector x with sup-norm exactly h, the figure of merit is
 *
 *     err(x) = max_i dist(sum_j A_ij x_j, Z),
 *
 * and the oracle sweeps h = 1..X keeping every strict improvement: the
 * resulting minimal points realize the best error for every height <= X.
 * All comparisons are decided on certified intervals; when two candidates
 * cannot be separated even at the precision ceiling, the search throws
 * InconclusiveError instead of guessing.
 *
 * Canonical vectors: only vectors whose first nonzero coordinate is
 * positive are enumerated (x and -x give the same error), in ascending
 * lexicographic order, which fixes the tie-break deterministically.
 */

#include <dio/cf.hpp>
#include <dio/interval.hpp>
#include <dio/rational.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dio {

/**
 * A real number handle that can be asked for an enclosure of any
 * requested width. Backed by an exact rational, a continued fraction
 * (refined by deepening convergents), or sqrt of an integer; powers are
 * folded in so that entries like xi^k refine as a unit. Exactly-rational
 * entries (including even powers of a square root) report is_exact(),
 * which downstream uses for degeneracy detection and zero certification.
 *
 * Enclosures are cached; handles are cheap to copy (shared state) but
 * not safe for unsynchronized concurrent refinement.
 */
class RealEntry {
  public:
    static RealEntry exact(Rational r);
    static RealEntry cf_backed(CFExpansion cf, unsigned power = 1);
    static RealEntry sqrt_of(const Int& n, unsigned power = 1);

    /// This entry's value raised to the k-th power (k >= 1).
    RealEntry pow(unsigned k) const;

    /// Interval of width <= 2^-bits containing the value.
    RatInterval enclosure(long bits) const;

    bool is_exact() const { return exact_.has_value(); }
    /// Throws std::domain_error when not exact.
    const Rational& exact_value() const;

  private:
    RealEntry() = default;

    struct CfState;
    std::optional<Rational> exact_;
    std::shared_ptr<CfState> cf_;    // set for cf-backed entries
    Int sqrt_n_;                     // with sqrt_power_ > 0: (sqrt n)^power
    unsigned power_ = 1;
};

struct TargetSystem {
    enum class Kind { general_matrix, power_row, power_column };

    Kind kind = Kind::general_matrix;
    std::size_t n_rows = 0, m_cols = 0;
    std::vector<std::vector<RealEntry>> entries;  // [row][col]

    static TargetSystem general(std::vector<std::vector<RealEntry>> rows);
    /// 1 x n row (xi, xi^2, ..., xi^n); exact-zero forms are excluded
    /// from the search for this kind (strict positivity of the form).
    static TargetSystem power_row(const RealEntry& xi, std::size_t n);
    /// n x 1 column (xi; xi^2; ...; xi^n).
    static TargetSystem power_column(const RealEntry& xi, std::size_t n);

    TargetSystem transpose() const;
    bool all_entries_exact() const;
    /// True when some entry is exactly rational (degenerate power systems
    /// like sqrt targets with even powers, or rational targets).
    bool any_entry_exact() const;
};

struct ApproxRecord {
    Int height;                // sup-norm of x
    std::vector<Int> x;        // winning vector, first nonzero entry > 0
    std::vector<Int> nearest;  // nearest integers to the row values A.x
    RatInterval error;         // certified sup-norm distance
    bool exact_zero = false;   // error certified to be exactly 0
};

struct MinimalPointSeq {
    std::vector<ApproxRecord> records;  // increasing height, strictly decreasing error
    // Set when the sweep certified an exact integer form: the target is
    // rational in the relevant direction and the sweep stopped there.
    bool rational_target = false;
};

/// Raised when two candidate vectors cannot be ordered at the precision
/// ceiling (adversarial tie). Carries both vectors for diagnosis.
class InconclusiveError : public std::runtime_error {
  public:
    InconclusiveError(std::vector<Int> a, std::vector<Int> b, long bits);
    const std::vector<Int>& first() const { return a_; }
    const std::vector<Int>& second() const { return b_; }
    long precision_bits() const { return bits_; }

  private:
    std::vector<Int> a_, b_;
    long bits_;
};

struct OracleConfig {
    long base_bits = 48;    // starting evaluation precision
    long ceiling_bits = 0;  // 0 = derive from X and the system shape
};

/// Best record at height exactly <= X (the last minimal point of the
/// sweep). X >= 1.
ApproxRecord best_approx(const TargetSystem& target, const Int& X,
                         const OracleConfig& cfg = {});

/// All minimal points with height <= Xmax, in one sweep.
MinimalPointSeq minimal_points(const TargetSystem& target, const Int& Xmax,
                               const OracleConfig& cfg = {});

struct DirichletPoint {
    Int X;
    RatInterval c;  // epsilon(X) * X^(m/n), certified
};

/// c(X) = eps(X) * X^(m/n) at each requested height, where eps(X) is the
/// error of the latest minimal point with height <= X. heights must be
/// nonempty and strictly increasing.
std::vector<DirichletPoint> dirichlet_series(const TargetSystem& target,
                                             const std::vector<Int>& heights,
                                             const OracleConfig& cfg = {});

/// Enclosure of X^(num/den) for X >= 1, den >= 1, num >= 0 (integer root
/// of an integer power, dyadically refined to ~`bits` fractional bits).
RatInterval rational_power(const Int& X, long num, long den, long bits = 64);

}  // namespace dio
