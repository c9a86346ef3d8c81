#include <dio/constructions.hpp>

#include <dio/certlog.hpp>
#include <dio/words.hpp>

#include <algorithm>
#include <bit>
#include <memory>
#include <stdexcept>
#include <utility>

namespace dio {

ExtremalSpec::ExtremalSpec(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a < 1 || b < 1) throw std::invalid_argument("ExtremalSpec: a, b must be >= 1");
    if (a == b) throw std::invalid_argument("ExtremalSpec: a and b must be distinct");
}

CFExpansion xi_ab_cf(const ExtremalSpec& spec) {
    auto cache = std::make_shared<Word>(fibonacci_word_prefix(64));
    return CFExpansion::infinite(0, [cache, a = spec.a, b = spec.b](std::size_t i) {
        if (i > cache->size()) *cache = fibonacci_word_prefix(std::bit_ceil(i));
        return (*cache)[i - 1] == 'a' ? a : b;
    });
}

RatInterval xi_ab_value(const ExtremalSpec& spec, std::size_t depth) {
    return cf_value_interval(xi_ab_cf(spec), depth);
}

namespace {

MinimalTriple triple_of(long n, const ConvergentMatrix& m) {
    if (m.p != m.q_prev) throw std::logic_error("triple_sequence: matrix lost symmetry");
    return MinimalTriple{n, m.q, m.q_prev, m.p_prev};
}

}  // namespace

std::vector<MinimalTriple> triple_sequence(const ExtremalSpec& spec, long N) {
    if (N < 2) throw std::invalid_argument("triple_sequence: N must be >= 2");
    std::map<char, Int> assign{{'a', spec.a}, {'b', spec.b}};
    ConvergentMatrix prev2 = word_matrix("a", assign);    // n = 2
    ConvergentMatrix prev1 = word_matrix("aba", assign);  // n = 3
    ConvergentMatrix s_even = word_matrix("ab", assign);
    ConvergentMatrix s_odd = word_matrix("ba", assign);

    std::vector<MinimalTriple> out;
    out.push_back(triple_of(2, prev2));
    if (N == 2) return out;
    out.push_back(triple_of(3, prev1));
    for (long n = 4; n <= N; ++n) {
        ConvergentMatrix cur = prev1 * (n % 2 == 0 ? s_even : s_odd) * prev2;
        out.push_back(triple_of(n, cur));
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return out;
}

GrowthStats growth_stats(const ExtremalSpec& spec, long N) {
    if (N < 4) throw std::invalid_argument("growth_stats: N must be >= 4");
    std::vector<MinimalTriple> triples = triple_sequence(spec, N + 1);

    GrowthStats stats;
    RatInterval xi = xi_ab_value(spec, 64);
    Rational ab_sum{spec.a + spec.b}, ab_prod_1{spec.a * spec.b + 1};
    stats.ratio_limit = interval_pow(xi, 2) + xi * ab_sum + RatInterval(ab_prod_1);

    auto q_of = [&](long n) { return triples[static_cast<std::size_t>(n - 2)].x0; };
    for (long n = 4; n <= N; ++n) {
        GrowthRow row;
        row.n = n;
        row.ratio_19 = RatInterval(make_rational(q_of(n), q_of(n - 1) * q_of(n - 2)));
        row.exponent_20 = ln_interval(RatInterval(Rational(q_of(n + 1)))) /
                          ln_interval(RatInterval(Rational(q_of(n))));
        stats.rows.push_back(std::move(row));
    }
    return stats;
}

RatInterval sigma_of(const SigmaSpec& spec, const Rational& tolerance) {
    if (tolerance <= 0) throw std::domain_error("sigma_of: tolerance must be > 0");
    if (spec.period.empty()) throw std::invalid_argument("sigma_of: empty period");
    for (const Int& s : spec.period)
        if (s < 1) throw std::invalid_argument("sigma_of: period entry < 1");

    // Reversed prefixes [0; s_k, ..., s_1] converge, along each residue
    // class of k, to the purely periodic value of a rotation of the
    // reversed period; the liminf is the least of those L values.
    std::vector<Int> rev(spec.period.rbegin(), spec.period.rend());
    std::optional<RatInterval> best;
    for (std::size_t j = 0; j < rev.size(); ++j) {
        PeriodicCF rot;
        rot.period.assign(rev.begin() + j, rev.end());
        rot.period.insert(rot.period.end(), rev.begin(), rev.begin() + j);
        RatInterval v = periodic_cf_value(rot, tolerance);
        if (!best) {
            best = v;
        } else {
            best = RatInterval(std::min(best->lo, v.lo), std::min(best->hi, v.hi));
        }
    }
    return *best;
}

ExponentQuadrupleT13 theorem13_exponents(const RatInterval& sigma) {
    if (sigma.lo <= 0) throw std::domain_error("theorem13_exponents: sigma must be positive");
    if (sigma.hi > 1) throw std::domain_error("theorem13_exponents: sigma must lie in (0, 1]");

    ExponentQuadrupleT13 quad;
    quad.lambda2 = XReal(Rational(1));
    RatInterval w2 = RatInterval(Rational(1)) + RatInterval(Rational(2)) / sigma;
    RatInterval w2_hat = sigma + Rational(2);
    quad.w2 = XReal(w2);
    quad.w2_hat = XReal(w2_hat);
    quad.lambda2_hat = XReal((sigma + Rational(1)) / (sigma + Rational(2)));

    // Internal consistency: w2(w2_hat - 1)/(w2 + w2_hat) collapses to 1
    // identically in sigma, so its interval must contain lambda2.
    RatInterval relation = w2 * (w2_hat - Rational(1)) / (w2 + w2_hat);
    if (!relation.contains(Rational(1)))
        throw std::logic_error("theorem13_exponents: quadruple relation violated");
    return quad;
}

}  // namespace dio
