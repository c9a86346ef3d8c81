#include <dio/interval.hpp>

#include <algorithm>
#include <stdexcept>

namespace dio {

RatInterval::RatInterval(const Rational& lo_, const Rational& hi_) : lo(lo_), hi(hi_) {
    if (lo > hi) throw std::domain_error("RatInterval: lo > hi");
}

int RatInterval::sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    return 0;
}

RatInterval RatInterval::operator+(const RatInterval& o) const {
    return RatInterval(lo + o.lo, hi + o.hi);
}

RatInterval RatInterval::operator-(const RatInterval& o) const {
    return RatInterval(lo - o.hi, hi - o.lo);
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return RatInterval(std::min({a, b, c, d}), std::max({a, b, c, d}));
}

RatInterval RatInterval::reciprocal() const {
    if (sign() == 0) throw std::domain_error("RatInterval: reciprocal of interval containing 0");
    return RatInterval(Rational(1) / hi, Rational(1) / lo);
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
    return *this * o.reciprocal();
}

RatInterval RatInterval::abs() const {
    if (lo >= 0) return *this;
    if (hi <= 0) return -*this;
    return RatInterval(Rational(0), std::max<Rational>(-lo, hi));
}

RatInterval RatInterval::round_outward(long bits) const {
    Int scale = pow2(bits);
    return RatInterval(make_rational(floor_scaled(lo, bits), scale),
                       make_rational(ceil_scaled(hi, bits), scale));
}

RatInterval hull(const RatInterval& a, const RatInterval& b) {
    return RatInterval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

RatInterval intersect(const RatInterval& a, const RatInterval& b) {
    Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo > hi) throw std::domain_error("intersect: disjoint intervals");
    return RatInterval(lo, hi);
}

RatInterval interval_pow(const RatInterval& x, unsigned k) {
    if (k == 0) return RatInterval(Rational(1));
    RatInterval acc = x;
    for (unsigned i = 1; i < k; ++i) acc = acc * x;
    if (k % 2 == 0 && acc.lo < 0) acc.lo = 0;  // even powers are nonnegative
    return acc;
}

RatInterval interval_linear_form(const std::vector<Rational>& coeffs,
                                 const std::vector<RatInterval>& xs) {
    if (coeffs.size() != xs.size())
        throw std::invalid_argument("interval_linear_form: length mismatch");
    RatInterval acc{Rational(0)};
    for (size_t i = 0; i < coeffs.size(); ++i) acc = acc + xs[i] * coeffs[i];
    return acc;
}

RatInterval interval_nearest_int_dist(const RatInterval& x) {
    Rational half(1, 2);
    if (x.width() >= 1) return RatInterval(Rational(0), half);

    Rational dlo = nearest_int_dist(x.lo), dhi = nearest_int_dist(x.hi);

    // Zero is attained iff an integer lies inside x.
    Rational lo = Rational(ceil_int(x.lo)) <= x.hi ? Rational(0) : std::min(dlo, dhi);

    // 1/2 is attained iff a half-integer lies inside x: check for an odd
    // integer in 2x.
    Int first_ge = ceil_int(2 * x.lo);
    if (first_ge % 2 == 0) first_ge += 1;
    Rational hi = Rational(first_ge) <= 2 * x.hi ? half : std::max(dlo, dhi);
    return RatInterval(lo, hi);
}

std::optional<int> three_way_compare(const RatInterval& a, const RatInterval& b) {
    if (a.hi < b.lo) return -1;
    if (a.lo > b.hi) return 1;
    if (a.is_point() && b.is_point()) return 0;  // equal points
    return std::nullopt;
}

RatInterval sqrt_interval(const RatInterval& x, long bits) {
    if (x.lo < 0) throw std::domain_error("sqrt_interval: negative interval");
    // sqrt endpoint by endpoint: floor(sqrt(lo * 4^bits)) / 2^bits and the
    // matching ceiling for hi bound the true roots from below and above.
    auto sqrt_floor = [&](const Rational& v) {
        Int scaled = floor_scaled(v, 2 * bits);
        Int root;
        mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
        return make_rational(root, pow2(bits));
    };
    auto sqrt_ceil = [&](const Rational& v) {
        Int scaled = ceil_scaled(v, 2 * bits);
        Int root, rem;
        mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());
        if (rem != 0) root += 1;
        return make_rational(root, pow2(bits));
    };
    return RatInterval(sqrt_floor(x.lo), sqrt_ceil(x.hi));
}

RatInterval sqrt_interval(const Int& n, long bits) {
    if (n < 0) throw std::domain_error("sqrt_interval: negative argument");
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        return RatInterval(Rational(root));
    }
    return sqrt_interval(RatInterval(Rational(n)), bits);
}

}  // namespace dio
