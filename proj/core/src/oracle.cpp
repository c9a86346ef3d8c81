#include <dio/oracle.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

namespace dio {

// ---------------------------------------------------------------- entries

struct RealEntry::CfState {
    CFExpansion cf;
    std::size_t depth = 8;
    RatInterval base;  // cf value bracket at `depth`

    explicit CfState(CFExpansion c) : cf(std::move(c)) { base = cf_value_interval(cf, depth); }
};

RealEntry RealEntry::exact(Rational r) {
    RealEntry e;
    e.exact_ = std::move(r);
    return e;
}

RealEntry RealEntry::cf_backed(CFExpansion cf, unsigned power) {
    if (power < 1) throw std::invalid_argument("RealEntry: power must be >= 1");
    if (cf.is_finite()) {
        Rational v = cf.exact_value();
        Rational acc = 1;
        for (unsigned i = 0; i < power; ++i) acc *= v;
        return exact(acc);
    }
    RealEntry e;
    e.cf_ = std::make_shared<CfState>(std::move(cf));
    e.power_ = power;
    return e;
}

RealEntry RealEntry::sqrt_of(const Int& n, unsigned power) {
    if (power < 1) throw std::invalid_argument("RealEntry: power must be >= 1");
    if (n < 0) throw std::domain_error("RealEntry: sqrt of negative integer");
    Int root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    if (root * root == n) {  // perfect square: exactly root^power
        Int v;
        mpz_pow_ui(v.get_mpz_t(), root.get_mpz_t(), power);
        return exact(Rational(v));
    }
    if (power % 2 == 0) {  // n^(power/2) is an integer
        Int v;
        mpz_pow_ui(v.get_mpz_t(), n.get_mpz_t(), power / 2);
        return exact(Rational(v));
    }
    RealEntry e;
    e.sqrt_n_ = n;
    e.power_ = power;
    return e;
}

RealEntry RealEntry::pow(unsigned k) const {
    if (k < 1) throw std::invalid_argument("RealEntry: power must be >= 1");
    if (exact_) {
        Int num, den;
        mpz_pow_ui(num.get_mpz_t(), exact_->get_num_mpz_t(), k);
        mpz_pow_ui(den.get_mpz_t(), exact_->get_den_mpz_t(), k);
        return exact(make_rational(num, den));
    }
    if (cf_) {
        RealEntry e;
        e.cf_ = cf_;  // refinement cache shared across powers of one base
        e.power_ = power_ * k;
        return e;
    }
    return sqrt_of(sqrt_n_, power_ * k);
}

const Rational& RealEntry::exact_value() const {
    if (!exact_) throw std::domain_error("RealEntry: not an exact rational");
    return *exact_;
}

RatInterval RealEntry::enclosure(long bits) const {
    if (exact_) return RatInterval(*exact_);
    Rational target = make_rational(1, pow2(bits));
    if (cf_) {
        for (;;) {
            RatInterval powered = interval_pow(cf_->base, power_);
            if (powered.width() <= target) return powered;
            cf_->depth *= 2;
            cf_->base = cf_value_interval(cf_->cf, cf_->depth);
        }
    }
    for (long b = bits + 4;; b *= 2) {
        RatInterval powered = interval_pow(sqrt_interval(sqrt_n_, b), power_);
        if (powered.width() <= target) return powered;
    }
}

// ---------------------------------------------------------------- targets

TargetSystem TargetSystem::general(std::vector<std::vector<RealEntry>> rows) {
    if (rows.empty() || rows[0].empty())
        throw std::invalid_argument("TargetSystem: empty matrix");
    TargetSystem t;
    t.kind = Kind::general_matrix;
    t.n_rows = rows.size();
    t.m_cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != t.m_cols) throw std::invalid_argument("TargetSystem: ragged matrix");
    t.entries = std::move(rows);
    return t;
}

TargetSystem TargetSystem::power_row(const RealEntry& xi, std::size_t n) {
    if (n < 1) throw std::invalid_argument("TargetSystem: need n >= 1");
    TargetSystem t;
    t.kind = Kind::power_row;
    t.n_rows = 1;
    t.m_cols = n;
    t.entries.resize(1);
    for (std::size_t k = 1; k <= n; ++k) t.entries[0].push_back(xi.pow(static_cast<unsigned>(k)));
    return t;
}

TargetSystem TargetSystem::power_column(const RealEntry& xi, std::size_t n) {
    TargetSystem row = power_row(xi, n);
    TargetSystem t;
    t.kind = Kind::power_column;
    t.n_rows = n;
    t.m_cols = 1;
    t.entries.resize(n);
    for (std::size_t k = 0; k < n; ++k) t.entries[k].push_back(row.entries[0][k]);
    return t;
}

TargetSystem TargetSystem::transpose() const {
    TargetSystem t;
    t.kind = kind == Kind::power_row      ? Kind::power_column
             : kind == Kind::power_column ? Kind::power_row
                                          : Kind::general_matrix;
    t.n_rows = m_cols;
    t.m_cols = n_rows;
    t.entries.assign(m_cols, std::vector<RealEntry>());
    for (std::size_t i = 0; i < n_rows; ++i)
        for (std::size_t j = 0; j < m_cols; ++j) t.entries[j].push_back(entries[i][j]);
    return t;
}

bool TargetSystem::all_entries_exact() const {
    for (const auto& row : entries)
        for (const auto& e : row)
            if (!e.is_exact()) return false;
    return true;
}

bool TargetSystem::any_entry_exact() const {
    for (const auto& row : entries)
        for (const auto& e : row)
            if (e.is_exact()) return true;
    return false;
}

// ---------------------------------------------------------------- errors

InconclusiveError::InconclusiveError(std::vector<Int> a, std::vector<Int> b, long bits)
    : std::runtime_error("oracle: candidates indistinguishable at precision ceiling (" +
                         std::to_string(bits) + " bits)"),
      a_(std::move(a)),
      b_(std::move(b)),
      bits_(bits) {}

namespace {

std::vector<Int> to_int_vector(const std::vector<long>& x) {
    return std::vector<Int>(x.begin(), x.end());
}

// --------------------------------------------------------- enumeration

// Visits canonical vectors (first nonzero coordinate positive) with
// sup-norm exactly h, in ascending lexicographic order.
template <typename F>
void shell_rec(std::vector<long>& x, std::size_t pos, bool seen_nonzero, bool seen_h, long h,
               const F& f) {
    const std::size_t m = x.size();
    if (pos + 1 == m) {
        if (!seen_h) {
            if (seen_nonzero) {
                x[pos] = -h;
                f(x);
            }
            x[pos] = h;
            f(x);
        } else {
            for (long v = seen_nonzero ? -h : 0; v <= h; ++v) {
                x[pos] = v;
                f(x);
            }
        }
        return;
    }
    for (long v = seen_nonzero ? -h : 0; v <= h; ++v) {
        x[pos] = v;
        shell_rec(x, pos + 1, seen_nonzero || v != 0, seen_h || v == h || v == -h, h, f);
    }
}

template <typename F>
void for_each_shell_vector(std::size_t m, long h, const F& f) {
    std::vector<long> x(m, 0);
    shell_rec(x, 0, false, false, h, f);
}

// ------------------------------------------------- interval evaluation

// dist(S/2^bits, Z) on the integer scale: certified [lo, hi] with
// 0 <= lo <= hi <= 2^(bits-1), given S in [s_lo, s_hi].
void scaled_dist(const Int& s_lo, const Int& s_hi, const Int& scale, Int& out_lo, Int& out_hi) {
    Int half = scale / 2;
    if (s_hi - s_lo >= scale) {
        out_lo = 0;
        out_hi = half;
        return;
    }
    auto dist_of = [&](const Int& s) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), s.get_mpz_t(), scale.get_mpz_t());
        Int other = scale - r;
        return r <= other ? r : other;
    };
    Int d_lo = dist_of(s_lo), d_hi = dist_of(s_hi);

    Int first_mult;  // smallest multiple of scale >= s_lo
    mpz_cdiv_q(first_mult.get_mpz_t(), s_lo.get_mpz_t(), scale.get_mpz_t());
    first_mult *= scale;
    out_lo = first_mult <= s_hi ? Int(0) : std::min(d_lo, d_hi);

    Int k;  // smallest odd k with k*half >= s_lo
    mpz_cdiv_q(k.get_mpz_t(), s_lo.get_mpz_t(), half.get_mpz_t());
    if (k % 2 == 0) k += 1;
    out_hi = k * half <= s_hi ? half : std::max(d_lo, d_hi);
}

struct Snapshot {
    struct Cell {
        bool exact = false;
        Rational value;  // when exact
        Int lo, hi;      // value * 2^bits, outward, when not exact
    };
    long bits = 0;
    Int scale;
    std::vector<std::vector<Cell>> rows;
};

struct Evaluated {
    std::vector<long> x;
    Int lo, hi;  // sup-distance * 2^bits, certified
    long bits = 0;
};

class EvalContext {
  public:
    EvalContext(const TargetSystem& target, long base_bits, long ceiling_bits)
        : target_(target), base_bits_(base_bits), ceiling_bits_(ceiling_bits) {}

    long base_bits() const { return base_bits_; }
    long ceiling_bits() const { return ceiling_bits_; }

    Evaluated eval(const std::vector<long>& x, long bits) {
        const Snapshot& snap = snapshot(bits);
        Evaluated out;
        out.x = x;
        out.bits = bits;
        out.lo = 0;
        out.hi = 0;
        for (std::size_t i = 0; i < target_.n_rows; ++i) {
            Int row_lo, row_hi;
            row_dist(snap, i, x, row_lo, row_hi);
            if (row_lo > out.lo) out.lo = row_lo;
            if (row_hi > out.hi) out.hi = row_hi;
        }
        return out;
    }

    /// Nearest integers to the row values at the given precision.
    std::vector<Int> nearest_ints(const std::vector<long>& x, long bits) {
        const Snapshot& snap = snapshot(bits);
        std::vector<Int> out;
        for (std::size_t i = 0; i < target_.n_rows; ++i) {
            Rational ex;
            Int lo, hi;
            bool inexact = row_value(snap, i, x, ex, lo, hi);
            Int y;
            if (!inexact) {
                y = floor_int(ex + Rational(1, 2));
            } else {
                if (ex != 0) {
                    lo += floor_scaled(ex, snap.bits);
                    hi += ceil_scaled(ex, snap.bits);
                }
                Int mid = (lo + hi) / 2 + snap.scale / 2;
                mpz_fdiv_q(y.get_mpz_t(), mid.get_mpz_t(), snap.scale.get_mpz_t());
            }
            out.push_back(y);
        }
        return out;
    }

  private:
    const Snapshot& snapshot(long bits) {
        auto it = snaps_.find(bits);
        if (it != snaps_.end()) return it->second;
        Snapshot snap;
        snap.bits = bits;
        snap.scale = pow2(bits);
        for (const auto& row : target_.entries) {
            std::vector<Snapshot::Cell> cells;
            for (const RealEntry& e : row) {
                Snapshot::Cell c;
                if (e.is_exact()) {
                    c.exact = true;
                    c.value = e.exact_value();
                } else {
                    RatInterval enc = e.enclosure(bits);
                    c.lo = floor_scaled(enc.lo, bits);
                    c.hi = ceil_scaled(enc.hi, bits);
                }
                cells.push_back(std::move(c));
            }
            snap.rows.push_back(std::move(cells));
        }
        return snaps_.emplace(bits, std::move(snap)).first->second;
    }

    // Row value as exact rational `ex` plus inexact scaled part [lo, hi].
    // Returns whether any inexact entry contributed.
    bool row_value(const Snapshot& snap, std::size_t i, const std::vector<long>& x, Rational& ex,
                   Int& lo, Int& hi) const {
        ex = 0;
        lo = 0;
        hi = 0;
        bool inexact = false;
        const auto& cells = snap.rows[i];
        for (std::size_t j = 0; j < cells.size(); ++j) {
            long c = x[j];
            if (c == 0) continue;
            const auto& cell = cells[j];
            if (cell.exact) {
                ex += cell.value * static_cast<long>(c);
            } else {
                inexact = true;
                if (c > 0) {
                    lo += cell.lo * c;
                    hi += cell.hi * c;
                } else {
                    lo += cell.hi * c;
                    hi += cell.lo * c;
                }
            }
        }
        return inexact;
    }

    void row_dist(const Snapshot& snap, std::size_t i, const std::vector<long>& x, Int& out_lo,
                  Int& out_hi) const {
        Rational ex;
        Int lo, hi;
        bool inexact = row_value(snap, i, x, ex, lo, hi);
        if (!inexact) {
            // Fully exact row: distance is an exact rational; zero stays
            // certified zero under outward scaling.
            Rational d = nearest_int_dist(ex);
            out_lo = floor_scaled(d, snap.bits);
            out_hi = ceil_scaled(d, snap.bits);
            return;
        }
        if (ex != 0) {
            lo += floor_scaled(ex, snap.bits);
            hi += ceil_scaled(ex, snap.bits);
        }
        scaled_dist(lo, hi, snap.scale, out_lo, out_hi);
    }

    const TargetSystem& target_;
    long base_bits_, ceiling_bits_;
    std::map<long, Snapshot> snaps_;
};

// Rescale a scaled pair to a common precision for cross-bit comparison.
// (a at 2^ba) < (b at 2^bb)  <=>  a * 2^bb < b * 2^ba.
bool scaled_less(const Int& a, long ba, const Int& b, long bb) {
    if (ba == bb) return a < b;
    if (ba < bb) return (a << (bb - ba)) < b;
    return a < (b << (ba - bb));
}

// Certified strict comparison err(a) < err(b), escalating precision on
// both sides until decidable. Returns false when err(a) >= err(b) is
// certified instead.
bool certified_less(Evaluated& a, Evaluated& b, EvalContext& ctx) {
    for (;;) {
        if (scaled_less(a.hi, a.bits, b.lo, b.bits)) return true;
        if (!scaled_less(a.lo, a.bits, b.hi, b.bits)) return false;  // a.lo >= b.hi
        long next = std::max(a.bits, b.bits) * 2;
        if (next > ctx.ceiling_bits())
            throw InconclusiveError(to_int_vector(a.x), to_int_vector(b.x),
                                    std::max(a.bits, b.bits));
        a = ctx.eval(a.x, next);
        b = ctx.eval(b.x, next);
    }
}

RatInterval error_interval(const Evaluated& e) {
    Int scale = pow2(e.bits);
    return RatInterval(make_rational(e.lo, scale), make_rational(e.hi, scale));
}

// ------------------------------------------------ exact-rational sweep

// For all-rational targets whose magnitudes permit it, row values are
// evaluated as int64 residues modulo the row's common denominator: exact
// distances, no intervals, no refinement.
struct ExactPlan {
    std::vector<int64_t> den;               // per-row common denominator
    std::vector<std::vector<int64_t>> num;  // per-row scaled numerators
};

std::optional<ExactPlan> make_exact_plan(const TargetSystem& t, long X) {
    if (!t.all_entries_exact()) return std::nullopt;
    ExactPlan plan;
    Int sum_bound = 0;
    for (const auto& row : t.entries) {
        Int d(1);
        for (const RealEntry& e : row)
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.exact_value().get_den_mpz_t());
        if (!d.fits_slong_p()) return std::nullopt;
        std::vector<int64_t> nums;
        Int row_bound = 0;
        for (const RealEntry& e : row) {
            Int scaled = e.exact_value().get_num() * (d / e.exact_value().get_den());
            if (!scaled.fits_slong_p()) return std::nullopt;
            nums.push_back(scaled.get_si());
            row_bound += abs(scaled);
        }
        row_bound *= X;
        if (row_bound > sum_bound) sum_bound = row_bound;
        plan.den.push_back(d.get_si());
        plan.num.push_back(std::move(nums));
    }
    // Residue sums must stay well inside int64.
    if (sum_bound > Int(int64_t{1} << 62)) return std::nullopt;
    return plan;
}

struct ExactEval {
    std::vector<long> x;
    int64_t num = 0, den = 1;  // sup distance = num/den exactly
};

// max_i dist(S_i/D_i, Z) as an exact fraction.
ExactEval exact_eval(const ExactPlan& plan, const std::vector<long>& x) {
    ExactEval out;
    out.x = x;
    for (std::size_t i = 0; i < plan.den.size(); ++i) {
        int64_t d = plan.den[i];
        int64_t s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += plan.num[i][j] * x[j];
        int64_t r = s % d;
        if (r < 0) r += d;
        int64_t dist = std::min(r, d - r);
        // dist/d > out.num/out.den ?
        if (static_cast<__int128>(dist) * out.den > static_cast<__int128>(out.num) * d) {
            out.num = dist;
            out.den = d;
        }
    }
    return out;
}

MinimalPointSeq sweep_exact(const TargetSystem& target, const ExactPlan& plan, long X) {
    MinimalPointSeq seq;
    std::optional<ExactEval> best;
    for (long h = 1; h <= X; ++h) {
        std::optional<ExactEval> shell;
        for_each_shell_vector(target.m_cols, h, [&](const std::vector<long>& x) {
            ExactEval c = exact_eval(plan, x);
            if (target.kind == TargetSystem::Kind::power_row && c.num == 0) return;
            const ExactEval* ref = shell ? &*shell : (best ? &*best : nullptr);
            if (ref && static_cast<__int128>(c.num) * ref->den >=
                           static_cast<__int128>(ref->num) * c.den)
                return;
            shell = std::move(c);
        });
        if (!shell) continue;
        ApproxRecord rec;
        rec.height = h;
        rec.x = to_int_vector(shell->x);
        for (std::size_t i = 0; i < plan.den.size(); ++i) {
            int64_t s = 0;
            for (std::size_t j = 0; j < shell->x.size(); ++j) s += plan.num[i][j] * shell->x[j];
            // nearest integer to s/d, exact
            Int y;
            Int num(2 * s + plan.den[i]), den(2 * plan.den[i]);
            mpz_fdiv_q(y.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            rec.nearest.push_back(y);
        }
        rec.error = RatInterval(make_rational(shell->num, shell->den));
        rec.exact_zero = shell->num == 0;
        seq.records.push_back(std::move(rec));
        best = std::move(shell);
        if (seq.records.back().exact_zero) {
            seq.rational_target = true;
            break;
        }
    }
    return seq;
}

// ------------------------------------------------------ interval sweep

long derive_ceiling(const TargetSystem& t, long X, const OracleConfig& cfg) {
    if (cfg.ceiling_bits > 0) return cfg.ceiling_bits;
    long dim = static_cast<long>(std::max(t.n_rows, t.m_cols));
    long xbits = static_cast<long>(mpz_sizeinbase(Int(X).get_mpz_t(), 2));
    return std::max<long>(384, 8 * dim * xbits + 64);
}

MinimalPointSeq sweep_intervals(const TargetSystem& target, long X, const OracleConfig& cfg) {
    EvalContext ctx(target, cfg.base_bits, derive_ceiling(target, X, cfg));
    MinimalPointSeq seq;
    std::optional<Evaluated> best;
    for (long h = 1; h <= X; ++h) {
        std::optional<Evaluated> shell;
        for_each_shell_vector(target.m_cols, h, [&](const std::vector<long>& x) {
            Evaluated c = ctx.eval(x, ctx.base_bits());
            if (target.kind == TargetSystem::Kind::power_row && c.hi == 0) return;
            Evaluated* ref = shell ? &*shell : (best ? &*best : nullptr);
            if (!ref) {
                shell = std::move(c);
                return;
            }
            if (certified_less(c, *ref, ctx)) shell = std::move(c);
        });
        if (!shell) continue;
        if (!seq.records.empty()) {
            // Keep the stored bracket of the previous record in sync with
            // any refinement done while comparing against it.
            seq.records.back().error = error_interval(*best);
        }
        ApproxRecord rec;
        rec.height = h;
        rec.x = to_int_vector(shell->x);
        rec.nearest = ctx.nearest_ints(shell->x, shell->bits);
        rec.error = error_interval(*shell);
        rec.exact_zero = shell->hi == 0;
        seq.records.push_back(std::move(rec));
        best = std::move(shell);
        if (seq.records.back().exact_zero) {
            seq.rational_target = true;
            break;
        }
    }
    return seq;
}

long to_search_bound(const Int& X, std::size_t m_cols) {
    if (X < 1) throw std::invalid_argument("oracle: X must be >= 1");
    if (!X.fits_slong_p()) throw std::invalid_argument("oracle: X too large for exhaustive search");
    long x = X.get_si();
    // Keep the full enumeration within ~10^9 visited vectors.
    double states = 1;
    for (std::size_t j = 0; j < m_cols; ++j) states *= 2.0 * static_cast<double>(x) + 1;
    if (states > 1e9) throw std::invalid_argument("oracle: search space too large");
    return x;
}

}  // namespace

MinimalPointSeq minimal_points(const TargetSystem& target, const Int& Xmax,
                               const OracleConfig& cfg) {
    long X = to_search_bound(Xmax, target.m_cols);
    if (auto plan = make_exact_plan(target, X)) return sweep_exact(target, *plan, X);
    return sweep_intervals(target, X, cfg);
}

ApproxRecord best_approx(const TargetSystem& target, const Int& X, const OracleConfig& cfg) {
    MinimalPointSeq seq = minimal_points(target, X, cfg);
    if (seq.records.empty())
        throw std::domain_error("best_approx: every candidate form is an exact integer");
    return seq.records.back();
}

RatInterval rational_power(const Int& X, long num, long den, long bits) {
    if (X < 1) throw std::domain_error("rational_power: X must be >= 1");
    if (den < 1 || num < 0) throw std::domain_error("rational_power: bad exponent");
    Int p;
    mpz_pow_ui(p.get_mpz_t(), X.get_mpz_t(), static_cast<unsigned long>(num));
    // floor((X^num * 2^(den*bits))^(1/den)) / 2^bits
    Int scaled = p << (den * bits);
    Int root;
    mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(den));
    Int scale = pow2(bits);
    return RatInterval(make_rational(root, scale), make_rational(root + 1, scale));
}

std::vector<DirichletPoint> dirichlet_series(const TargetSystem& target,
                                             const std::vector<Int>& heights,
                                             const OracleConfig& cfg) {
    if (heights.empty()) throw std::invalid_argument("dirichlet_series: no heights");
    for (std::size_t i = 0; i + 1 < heights.size(); ++i)
        if (heights[i] >= heights[i + 1])
            throw std::invalid_argument("dirichlet_series: heights must be increasing");

    MinimalPointSeq seq = minimal_points(target, heights.back(), cfg);
    long num = static_cast<long>(target.m_cols), den = static_cast<long>(target.n_rows);

    std::vector<DirichletPoint> out;
    std::size_t next = 0;  // first record with height > X
    const RatInterval* eps = nullptr;
    for (const Int& X : heights) {
        while (next < seq.records.size() && seq.records[next].height <= X)
            eps = &seq.records[next++].error;
        DirichletPoint pt;
        pt.X = X;
        if (!eps) throw std::invalid_argument("dirichlet_series: height below first record");
        if (next <= seq.records.size() && next > 0 && seq.records[next - 1].exact_zero) {
            pt.c = RatInterval(Rational(0));
        } else {
            pt.c = *eps * rational_power(X, num, den);
        }
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace dio
