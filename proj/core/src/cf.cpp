#include <dio/cf.hpp>

#include <stdexcept>
#include <utility>

namespace dio {

ConvergentMatrix ConvergentMatrix::quotient(const Int& a) {
    ConvergentMatrix m;
    m.q = a;
    m.q_prev = 1;
    m.p = 1;
    m.p_prev = 0;
    m.index = 1;
    return m;
}

ConvergentMatrix ConvergentMatrix::operator*(const ConvergentMatrix& o) const {
    ConvergentMatrix r;
    r.q = q * o.q + q_prev * o.p;
    r.q_prev = q * o.q_prev + q_prev * o.p_prev;
    r.p = p * o.q + p_prev * o.p;
    r.p_prev = p * o.q_prev + p_prev * o.p_prev;
    r.index = index + o.index;
    return r;
}

ConvergentMatrix ConvergentMatrix::step(const Int& a) const {
    ConvergentMatrix r;
    r.q = q * a + q_prev;
    r.q_prev = q;
    r.p = p * a + p_prev;
    r.p_prev = p;
    r.index = index + 1;
    return r;
}

Rational ConvergentMatrix::value(const Int& a0) const {
    if (q == 0) throw std::domain_error("ConvergentMatrix: zero denominator");
    return Rational(a0) + make_rational(p, q);
}

CFExpansion CFExpansion::finite(Int a0, std::vector<Int> quotients) {
    for (const Int& a : quotients)
        if (a < 1) throw std::invalid_argument("CFExpansion: partial quotient < 1");
    // Canonical form: […, a_k, 1] == […, a_k + 1] and [a0; 1] == [a0 + 1;].
    if (!quotients.empty() && quotients.back() == 1) {
        quotients.pop_back();
        if (quotients.empty())
            a0 += 1;
        else
            quotients.back() += 1;
    }
    CFExpansion cf;
    cf.a0_ = std::move(a0);
    cf.quotients_ = std::move(quotients);
    return cf;
}

CFExpansion CFExpansion::infinite(Int a0, std::function<Int(std::size_t)> gen) {
    if (!gen) throw std::invalid_argument("CFExpansion: null generator");
    CFExpansion cf;
    cf.a0_ = std::move(a0);
    cf.gen_ = std::move(gen);
    return cf;
}

std::size_t CFExpansion::length() const {
    if (gen_) throw std::domain_error("CFExpansion: length of infinite expansion");
    return quotients_.size();
}

const Int& CFExpansion::quotient(std::size_t i) const {
    if (i == 0) throw std::out_of_range("CFExpansion: quotient index starts at 1");
    if (gen_) {
        while (quotients_.size() < i) {
            Int a = gen_(quotients_.size() + 1);
            if (a < 1) throw std::invalid_argument("CFExpansion: generated quotient < 1");
            quotients_.push_back(std::move(a));
        }
    } else if (i > quotients_.size()) {
        throw std::out_of_range("CFExpansion: quotient index past finite expansion");
    }
    return quotients_[i - 1];
}

std::size_t CFExpansion::available(std::size_t want) const {
    if (!gen_ && want > quotients_.size()) return quotients_.size();
    return want;
}

Rational CFExpansion::exact_value() const {
    if (gen_) throw std::domain_error("CFExpansion: exact value of infinite expansion");
    ConvergentMatrix m;
    for (const Int& a : quotients_) m = m.step(a);
    return m.index == 0 ? Rational(a0_) : m.value(a0_);
}

CFExpansion cf_of_rational(const Rational& r) {
    std::vector<Int> quotients;
    Int a0 = floor_int(r);
    Rational rem = r - Rational(a0);
    while (rem != 0) {
        Rational inv = Rational(1) / rem;
        Int a = floor_int(inv);
        quotients.push_back(a);
        rem = inv - Rational(a);
    }
    // The Euclidean loop's final quotient is >= 2 by construction, so the
    // result is already canonical; finite() re-checks anyway.
    return CFExpansion::finite(std::move(a0), std::move(quotients));
}

std::vector<ConvergentMatrix> convergents(const CFExpansion& cf, std::size_t n) {
    std::vector<ConvergentMatrix> out;
    out.reserve(n);
    ConvergentMatrix m;
    for (std::size_t i = 1; i <= n; ++i) {
        m = m.step(cf.quotient(i));  // throws out_of_range when exhausted
        out.push_back(m);
    }
    return out;
}

ConvergentMatrix word_matrix(const std::string& word, const std::map<char, Int>& assignment) {
    if (word.empty()) throw std::invalid_argument("word_matrix: empty word");
    ConvergentMatrix m;
    for (char c : word) {
        auto it = assignment.find(c);
        if (it == assignment.end())
            throw std::invalid_argument(std::string("word_matrix: unassigned letter '") + c + "'");
        if (it->second < 1) throw std::invalid_argument("word_matrix: assignment value < 1");
        m = m.step(it->second);
    }
    return m;
}

RatInterval cf_value_interval(const CFExpansion& cf, std::size_t depth) {
    if (depth == 0) throw std::invalid_argument("cf_value_interval: depth must be >= 1");
    if (cf.is_finite() && depth >= cf.length()) {
        Rational v = cf.exact_value();
        return RatInterval(v);
    }
    ConvergentMatrix m;
    for (std::size_t i = 1; i <= depth; ++i) m = m.step(cf.quotient(i));
    // Consecutive convergents straddle the value; order them and attach a0.
    Rational a = make_rational(m.p, m.q) + Rational(cf.integer_part());
    Rational b = make_rational(m.p_prev, m.q_prev) + Rational(cf.integer_part());
    return a <= b ? RatInterval(a, b) : RatInterval(b, a);
}

RatInterval periodic_cf_value(const PeriodicCF& p, const Rational& tolerance) {
    if (tolerance <= 0) throw std::domain_error("periodic_cf_value: tolerance must be > 0");
    if (p.period.empty()) throw std::invalid_argument("periodic_cf_value: empty period");
    for (const Int& a : p.period)
        if (a < 1) throw std::invalid_argument("periodic_cf_value: period entry < 1");
    for (std::size_t i = 1; i < p.preperiod.size(); ++i)
        if (p.preperiod[i] < 1) throw std::invalid_argument("periodic_cf_value: preperiod entry < 1");

    Int a0 = p.preperiod.empty() ? Int(0) : p.preperiod[0];
    std::vector<Int> head(p.preperiod.begin() + (p.preperiod.empty() ? 0 : 1), p.preperiod.end());

    // Unroll `reps` copies of the period; q grows at least like the
    // Fibonacci numbers, so the bracket width 1/(q_d q_{d−1}) collapses
    // geometrically and a few doublings always suffice.
    for (std::size_t reps = 2;; reps *= 2) {
        std::vector<Int> qs = head;
        for (std::size_t r = 0; r < reps; ++r) qs.insert(qs.end(), p.period.begin(), p.period.end());
        ConvergentMatrix m;
        for (const Int& a : qs) m = m.step(a);
        Rational ca = make_rational(m.p, m.q) + Rational(a0);
        Rational cb = make_rational(m.p_prev, m.q_prev) + Rational(a0);
        RatInterval iv = ca <= cb ? RatInterval(ca, cb) : RatInterval(cb, ca);
        if (iv.width() <= tolerance) return iv;
    }
}

CFExpansion periodic_expansion(const PeriodicCF& p) {
    if (p.period.empty()) throw std::invalid_argument("periodic_expansion: empty period");
    const Int a0 = p.preperiod.empty() ? Int(0) : p.preperiod.front();
    std::vector<Int> tail(p.preperiod.begin() + (p.preperiod.empty() ? 0 : 1), p.preperiod.end());
    std::vector<Int> period = p.period;
    return CFExpansion::infinite(a0, [tail, period](std::size_t i) {
        if (i <= tail.size()) return tail[i - 1];
        return period[(i - tail.size() - 1) % period.size()];
    });
}

}  // namespace dio
