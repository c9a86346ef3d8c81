#include <dio/rational.hpp>

#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace dio {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Int floor_int(const Rational& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int ceil_int(const Rational& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Rational nearest_int_dist(const Rational& x) {
    Rational frac = x - Rational(floor_int(x));  // in [0,1)
    Rational other = 1 - frac;
    return frac <= other ? frac : other;
}

Int pow2(long bits) {
    if (bits < 0) throw std::domain_error("pow2: negative exponent");
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    return p;
}

Int floor_scaled(const Rational& x, long bits) {
    Int num = x.get_num() << bits;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int ceil_scaled(const Rational& x, long bits) {
    Int num = x.get_num() << bits;
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
    return q;
}

std::string to_fraction_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal_string(const Rational& r, int significant_digits) {
    if (significant_digits < 1) significant_digits = 1;
    // mpf precision comfortably above the requested decimal digits.
    mpf_class f(r, static_cast<unsigned long>(significant_digits) * 4 + 64);
    std::vector<char> buf(static_cast<size_t>(significant_digits) + 64);
    gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
    return std::string(buf.data());
}

namespace {

bool is_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// The mpz_class string constructor auto-detects the base, so "0710678"
// would be read as (invalid) octal. Always parse decimal digits as such.
Int base10(const std::string& digits) { return Int(digits, 10); }

}  // namespace

Rational rational_from_string(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty input");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den))
            throw std::invalid_argument("rational_from_string: bad fraction '" + text + "'");
        Int d = base10(den);
        if (d == 0) throw std::invalid_argument("rational_from_string: zero denominator");
        value = make_rational(base10(num), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!is_digits(ip) || (!fp.empty() && !is_digits(fp)))
            throw std::invalid_argument("rational_from_string: bad decimal '" + text + "'");
        Int scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        value = make_rational(base10(ip) * scale + (fp.empty() ? Int(0) : base10(fp)), scale);
    } else {
        if (!is_digits(s))
            throw std::invalid_argument("rational_from_string: bad integer '" + text + "'");
        value = Rational(base10(s));
    }
    return neg ? Rational(-value) : value;
}

}  // namespace dio
