#include <dio/certlog.hpp>

#include <stdexcept>

namespace dio {

namespace {

// Enclosure of atanh(u) for |u| <= 1/2 via the odd series. The remainder
// after the terms summed has the sign of u and absolute value at most
// |u|^(2j+1)/(2j+1) * 1/(1-u^2) <= |u|^(2j+1)/(2j+1) * 4/3.
RatInterval atanh_enclosure(const Rational& u, long bits) {
    if (abs(u) > Rational(1, 2)) throw std::domain_error("atanh_enclosure: |u| > 1/2");
    if (u == 0) return RatInterval(Rational(0));

    Rational target = make_rational(1, pow2(bits));
    Rational u2 = u * u;
    Rational sum = 0, power = u;  // power = u^(2j+1)
    Rational tail;
    for (unsigned long j = 0;; ++j) {
        tail = abs(power) / Rational(2 * j + 1) * Rational(4, 3);
        if (tail <= target) break;
        sum += power / Rational(2 * j + 1);
        power *= u2;
    }
    return u > 0 ? RatInterval(sum, sum + tail) : RatInterval(sum - tail, sum);
}

// Enclosure of ln(t) for a single positive rational t.
RatInterval ln_point(const Rational& t, long bits) {
    // t = m * 2^e with m in [3/4, 3/2); sizeinbase gets e within 1.
    long e = static_cast<long>(mpz_sizeinbase(t.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(t.get_den_mpz_t(), 2));
    Rational m = e >= 0 ? Rational(t / Rational(pow2(e))) : Rational(t * Rational(pow2(-e)));
    while (m < Rational(3, 4)) { m *= 2; e -= 1; }
    while (m >= Rational(3, 2)) { m /= 2; e += 1; }

    // Coarsen m to dyadic before the series so huge operands (convergent
    // denominators run to millions of bits) never enter the power loop.
    long g = bits + 8;
    Rational m_lo = make_rational(floor_scaled(m, g), pow2(g));
    Rational m_hi = make_rational(ceil_scaled(m, g), pow2(g));

    // ln m = 2 atanh((m-1)/(m+1)), with |.| <= 1/5 + coarsening slack.
    RatInterval a_lo = atanh_enclosure((m_lo - 1) / (m_lo + 1), bits + 4);
    RatInterval a_hi = atanh_enclosure((m_hi - 1) / (m_hi + 1), bits + 4);
    RatInterval ln_m(a_lo.lo * 2, a_hi.hi * 2);
    return ln_m + ln2_interval(bits + 4) * Rational(e);
}

// Enclosure of exp(t) for a single rational t, |t| <= 64.
RatInterval exp_point(const Rational& t, long bits) {
    if (abs(t) > 64) throw std::domain_error("exp_interval: |argument| > 64");
    RatInterval l2 = ln2_interval(bits + 4);

    // t = k ln2 + r with |r| <= 0.36; exp(t) = 2^k exp(r).
    Int k_int = floor_int(t / l2.midpoint() + Rational(1, 2));
    long k = static_cast<long>(k_int.get_si());
    RatInterval r = (RatInterval(t) - l2 * Rational(k)).round_outward(bits + 8);

    Rational target = make_rational(1, pow2(bits));
    Rational r_abs = r.abs().hi;
    RatInterval sum{Rational(1)}, power{Rational(1)};  // power = r^j / j!
    Rational tail_abs = 1;
    for (unsigned long j = 1;; ++j) {
        power = power * r / Rational(j);
        sum = sum + power;
        tail_abs = tail_abs * r_abs / Rational(j);
        // Remainder after term j is at most twice the next term's bound.
        Rational tail = tail_abs * r_abs / Rational(j + 1) * 2;
        if (tail <= target) {
            sum = sum + RatInterval(-tail, tail);
            break;
        }
    }
    Rational scale = k >= 0 ? Rational(pow2(k)) : make_rational(Int(1), pow2(-k));
    return sum * scale;
}

}  // namespace

RatInterval ln2_interval(long bits) {
    RatInterval a = atanh_enclosure(Rational(1, 3), bits + 2);
    return RatInterval(a.lo * 2, a.hi * 2);
}

RatInterval ln_interval(const RatInterval& x, long bits) {
    if (x.lo <= 0) throw std::domain_error("ln_interval: requires a strictly positive interval");
    RatInterval at_lo = ln_point(x.lo, bits);
    if (x.is_point()) return at_lo;
    RatInterval at_hi = ln_point(x.hi, bits);
    return RatInterval(at_lo.lo, at_hi.hi);  // ln is increasing
}

RatInterval exp_interval(const RatInterval& x, long bits) {
    RatInterval at_lo = exp_point(x.lo, bits);
    if (x.is_point()) return at_lo;
    RatInterval at_hi = exp_point(x.hi, bits);
    return RatInterval(at_lo.lo, at_hi.hi);  // exp is increasing
}

}  // namespace dio
