#include <dio/exponents.hpp>

#include <dio/certlog.hpp>

#include <algorithm>
#include <stdexcept>

namespace dio {

namespace {

// Enough for ~12 correct decimal digits in each log; the estimates are
// dominated by finite-sample bias long before log precision matters.
constexpr long kLogBits = 40;

RatInterval ln_of_int(const Int& h) {
    return ln_interval(RatInterval(Rational(h)), kLogBits);
}

// -ln(eps)/ln(H) for eps in (0,1), H >= 2; both logs certified.
RatInterval sample_ratio(const RatInterval& eps, const Int& h) {
    RatInterval num = -ln_interval(eps, kLogBits);
    return num / ln_of_int(h);
}

struct SamplePoint {
    RatInterval x, y;  // (ln H, ln eps)
};

RatInterval regression_slope(const std::vector<SamplePoint>& pts) {
    if (pts.size() < 2)
        throw std::invalid_argument("estimate_exponents: slope method needs at least two samples");
    const RatInterval n{Rational(static_cast<long>(pts.size()))};
    RatInterval sx, sy;
    for (const auto& p : pts) {
        sx = sx + p.x;
        sy = sy + p.y;
    }
    const RatInterval xbar = sx / n, ybar = sy / n;
    RatInterval sxy, sxx;
    for (const auto& p : pts) {
        const RatInterval dx = p.x - xbar;
        sxy = sxy + dx * (p.y - ybar);
        sxx = sxx + interval_pow(dx, 2);
    }
    if (sxx.sign() != 1)
        throw std::domain_error("estimate_exponents: heights too clustered for a certified slope");
    return sxy / sxx;
}

// Positive-error record whose logs are safe to take. lo == 0 without the
// exact-zero certificate means the sweep's precision floor was reached;
// refuse rather than fabricate a sample.
const RatInterval& checked_error(const ApproxRecord& rec) {
    if (rec.error.lo == 0)
        throw std::domain_error(
            "estimate_exponents: record error indistinguishable from zero at recorded precision");
    return rec.error;
}

}  // namespace

ExponentEstimate estimate_exponents(const MinimalPointSeq& seq, long burn_in,
                                    EstimateMethod method) {
    if (burn_in < 0) throw std::invalid_argument("estimate_exponents: negative burn-in");
    const auto& recs = seq.records;
    if (recs.size() < 2)
        throw std::invalid_argument("estimate_exponents: need at least two records");

    const long burn = std::min(burn_in, static_cast<long>(recs.size()) - 2);
    const std::size_t first = static_cast<std::size_t>(burn);
    const std::size_t last = recs.size() - 1;

    // Only the final record can be a certified zero (nothing improves on it).
    const bool terminal_zero = recs[last].exact_zero;

    ExponentEstimate est;
    est.method = method;
    est.burn_in = burn;
    est.sample_count = recs.size() - first;
    est.height_range = {recs[first].height, recs[last].height};

    std::optional<RatInterval> ord, unif;
    std::vector<SamplePoint> ord_pts, unif_pts;

    for (std::size_t i = first; i <= last; ++i) {
        if (recs[i].exact_zero) continue;
        const RatInterval& eps = checked_error(recs[i]);
        if (method == EstimateMethod::pointwise) {
            if (recs[i].height > 1) {
                RatInterval s = sample_ratio(eps, recs[i].height);
                ord = ord ? RatInterval(std::max(ord->lo, s.lo), std::max(ord->hi, s.hi)) : s;
            }
            if (i < last) {
                RatInterval s = sample_ratio(eps, recs[i + 1].height);
                unif = unif ? RatInterval(std::min(unif->lo, s.lo), std::min(unif->hi, s.hi)) : s;
            }
        } else {
            const RatInterval leps = ln_interval(eps, kLogBits);
            ord_pts.push_back({ln_of_int(recs[i].height), leps});
            if (i < last) unif_pts.push_back({ln_of_int(recs[i + 1].height), leps});
        }
    }

    if (method == EstimateMethod::slope) {
        if (!terminal_zero) ord = -regression_slope(ord_pts);
        unif = -regression_slope(unif_pts);
    }

    if (terminal_zero)
        est.ordinary = XReal::infinity();
    else if (ord)
        est.ordinary = XReal(*ord);
    else
        throw std::domain_error("estimate_exponents: no usable sample for the ordinary exponent");

    if (unif)
        est.uniform = XReal(*unif);
    else
        throw std::domain_error("estimate_exponents: no usable sample for the uniform exponent");
    return est;
}

ExponentQuadruple exponent_quadruple(const RealEntry& xi, const Int& Xmax, long burn_in,
                                     EstimateMethod method, const OracleConfig& cfg) {
    const TargetSystem row = TargetSystem::power_row(xi, 2);

    ExponentQuadruple q;
    if (row.any_entry_exact()) {
        q.degenerate = true;
        q.note = "a power of the target is exactly rational; the quadruple relations do not apply";
    }

    // An exact-integer power contributes an exact integer to every form, so
    // dropping it changes no distance-to-Z value. Keeping it would leave the
    // sweep with candidates of exactly equal error, which no precision can
    // separate.
    std::vector<RealEntry> kept;
    for (const RealEntry& e : row.entries[0])
        if (!(e.is_exact() && e.exact_value().get_den() == 1)) kept.push_back(e);
    if (kept.empty()) {
        q.v = q.v_prime = q.w = q.w_prime = XReal::infinity();
        q.note = "every power of the target is an exact integer; all forms vanish identically";
        return q;
    }
    if (kept.size() < row.entries[0].size())
        q.note += "; exact-integer powers were removed before the sweep";
    const TargetSystem reduced = TargetSystem::general({kept});

    const ExponentEstimate re =
        estimate_exponents(minimal_points(reduced, Xmax, cfg), burn_in, method);
    const ExponentEstimate ce =
        estimate_exponents(minimal_points(reduced.transpose(), Xmax, cfg), burn_in, method);
    q.v = re.ordinary;
    q.w = re.uniform;
    q.v_prime = ce.ordinary;
    q.w_prime = ce.uniform;
    return q;
}

XReal algebraic_expected(long d, long n) {
    if (d < 2) throw std::invalid_argument("algebraic_expected: degree must be >= 2");
    if (n < 1) throw std::invalid_argument("algebraic_expected: dimension must be >= 1");
    return XReal(RatInterval(Rational(std::min(d - 1, n))));
}

namespace {

// X^(n-1) - X^(n-2) - sum_{k=0}^{n-2} X^k at an exact rational point.
Rational theorem4_poly(long n, const Rational& u) {
    Rational upow(1), geom(0);
    for (long k = 0; k <= n - 2; ++k) {
        geom += upow;
        upow *= u;  // after the loop upow = u^(n-1)
    }
    return upow - upow / u - geom;
}

}  // namespace

RatInterval theorem4_bound(long n, const Rational& tolerance) {
    if (n < 2) throw std::invalid_argument("theorem4_bound: n must be >= 2");
    if (tolerance <= 0) throw std::domain_error("theorem4_bound: tolerance must be positive");

    // Bracket the largest real root in [2,3]: the polynomial is -2^(n-2)+1
    // <= 0 at 2 and positive at 3 (dominant term wins).
    Rational a(2), b(3);
    if (theorem4_poly(n, b) <= 0)
        throw std::logic_error("theorem4_bound: root bracket failed");

    auto bound_of = [n](const RatInterval& u) {
        const RatInterval shift = u - Rational(2) - interval_pow(u.reciprocal(), static_cast<unsigned>(n - 1));
        return shift / (u - Rational(1));
    };

    if (theorem4_poly(n, a) == 0)  // n = 2: the root is exactly 2
        return bound_of(RatInterval(a));

    while (true) {
        RatInterval enc = bound_of(RatInterval(a, b));
        if (enc.width() <= tolerance) return enc;
        const Rational mid = (a + b) / 2;
        const Rational pm = theorem4_poly(n, mid);
        if (pm == 0) return bound_of(RatInterval(mid));
        (pm < 0 ? a : b) = mid;
    }
}

MinimalPointSeq triples_as_minimal_points(const std::vector<MinimalTriple>& triples) {
    if (triples.size() < 3)
        throw std::invalid_argument("triples_as_minimal_points: need at least three triples");

    // The deepest triple brackets xi between consecutive convergent
    // ratios x1/x0 and x2/x1; it is spent on the bracket, not a record.
    const MinimalTriple& deep = triples.back();
    const Rational r1 = make_rational(deep.x1, deep.x0);
    const Rational r2 = make_rational(deep.x2, deep.x1);
    const RatInterval xi = r1 <= r2 ? RatInterval(r1, r2) : RatInterval(r2, r1);
    const RatInterval xi2 = interval_pow(xi, 2);

    MinimalPointSeq seq;
    for (std::size_t i = 0; i + 1 < triples.size(); ++i) {
        const MinimalTriple& t = triples[i];
        // Error against the triple's own integer pair (x1, x2), which for
        // these symmetric matrices realises the minimum at height x0.
        const RatInterval e1 = (xi * Rational(t.x0) - Rational(t.x1)).abs();
        const RatInterval e2 = (xi2 * Rational(t.x0) - Rational(t.x2)).abs();
        ApproxRecord rec;
        rec.height = t.x0;
        rec.x = {t.x0};
        rec.nearest = {t.x1, t.x2};
        rec.error = RatInterval(std::max(e1.lo, e2.lo), std::max(e1.hi, e2.hi));
        if (!seq.records.empty()) {
            const ApproxRecord& prev = seq.records.back();
            if (rec.height <= prev.height || rec.error.hi >= prev.error.lo)
                throw std::logic_error("triples_as_minimal_points: sequence not certified monotone");
        }
        seq.records.push_back(std::move(rec));
    }
    return seq;
}

}  // namespace dio
