#include <dio/cf.hpp>

#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "test_util.hpp"

using namespace dio;
using dio::test::rat;

namespace {

ConvergentMatrix product_of(const std::vector<Int>& quotients) {
    ConvergentMatrix m;
    for (const Int& a : quotients) m = m.step(a);
    return m;
}

bool palindrome(const std::vector<Int>& v) {
    return std::equal(v.begin(), v.end(), v.rbegin());
}

}  // namespace

TEST_CASE("quotient matrix and step agree with full products") {
    ConvergentMatrix id = ConvergentMatrix::identity();
    CHECK(id.q == 1);
    CHECK(id.p == 0);
    CHECK(id.det() == 1);
    CHECK(id.index == 0);

    ConvergentMatrix m = ConvergentMatrix::quotient(Int(3));
    CHECK(m.q == 3);
    CHECK(m.q_prev == 1);
    CHECK(m.p == 1);
    CHECK(m.p_prev == 0);

    dio::test::Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        std::vector<Int> as;
        int len = static_cast<int>(rng.pick(1, 10));
        for (int k = 0; k < len; ++k) as.emplace_back(rng.pick(1, 9));
        ConvergentMatrix stepped = product_of(as);
        ConvergentMatrix multiplied = ConvergentMatrix::identity();
        for (const Int& a : as) multiplied = multiplied * ConvergentMatrix::quotient(a);
        CHECK(stepped.q == multiplied.q);
        CHECK(stepped.q_prev == multiplied.q_prev);
        CHECK(stepped.p == multiplied.p);
        CHECK(stepped.p_prev == multiplied.p_prev);
        CHECK(stepped.index == len);
        // determinant alternates with the number of factors
        CHECK(stepped.det() == (len % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("convergents of the all-ones expansion are Fibonacci ratios") {
    CFExpansion golden = CFExpansion::infinite(Int(0), [](std::size_t) { return Int(1); });
    auto ms = convergents(golden, 10);
    REQUIRE(ms.size() == 10);
    CHECK(ms.back().q == 89);
    CHECK(ms.back().p == 55);
    CHECK(ms.back().value() == rat(55, 89));
    CHECK(ms.back().value(Int(2)) == rat(233, 89));
}

TEST_CASE("symmetry holds exactly for palindromic quotient words") {
    // exhaustive over {1,2}^len for short lengths
    for (int len = 1; len <= 7; ++len) {
        for (int mask = 0; mask < (1 << len); ++mask) {
            std::vector<Int> as;
            for (int k = 0; k < len; ++k) as.emplace_back((mask >> k & 1) ? 2 : 1);
            CHECK(product_of(as).symmetric() == palindrome(as));
        }
    }
}

TEST_CASE("cf_of_rational is canonical and round-trips") {
    CFExpansion cf = cf_of_rational(rat(22, 7));
    CHECK(cf.integer_part() == 3);
    REQUIRE(cf.length() == 1);
    CHECK(cf.quotient(1) == 7);
    CHECK(cf.exact_value() == rat(22, 7));

    CFExpansion neg = cf_of_rational(rat(-22, 7));
    CHECK(neg.integer_part() == -4);
    REQUIRE(neg.length() == 2);
    CHECK(neg.quotient(1) == 1);
    CHECK(neg.quotient(2) == 6);
    CHECK(neg.exact_value() == rat(-22, 7));

    dio::test::Rng rng(333);
    for (int i = 0; i < 300; ++i) {
        Rational r = rng.rational(5000);
        CFExpansion e = cf_of_rational(r);
        CHECK(e.exact_value() == r);
        if (e.length() > 0) CHECK(e.quotient(e.length()) >= 2);  // canonical tail
    }
}

TEST_CASE("finite expansions normalize a trailing 1") {
    CFExpansion cf = CFExpansion::finite(Int(2), {Int(1), Int(1)});  // [2;1,1] == [2;2]
    CHECK(cf.length() == 1);
    CHECK(cf.quotient(1) == 2);
    CHECK(cf.exact_value() == rat(5, 2));

    CFExpansion whole = CFExpansion::finite(Int(3), {});
    CHECK(whole.length() == 0);
    CHECK(whole.exact_value() == 3);

    CHECK_THROWS_AS(CFExpansion::finite(Int(1), {Int(0)}), std::invalid_argument);
}

TEST_CASE("infinite expansions generate on demand") {
    CFExpansion sqrt2 = periodic_expansion(PeriodicCF{{Int(1)}, {Int(2)}});
    CHECK(sqrt2.integer_part() == 1);
    CHECK(!sqrt2.is_finite());
    CHECK(sqrt2.quotient(1) == 2);
    CHECK(sqrt2.quotient(7) == 2);
    CHECK(sqrt2.available(5) == 5);
    CHECK_THROWS_AS(sqrt2.length(), std::domain_error);
    CHECK_THROWS_AS(sqrt2.exact_value(), std::domain_error);
}

TEST_CASE("periodic_expansion unrolls preperiod then cycles") {
    CFExpansion e = periodic_expansion(PeriodicCF{{Int(2), Int(1)}, {Int(3), Int(4)}});
    CHECK(e.integer_part() == 2);
    CHECK(e.quotient(1) == 1);
    CHECK(e.quotient(2) == 3);
    CHECK(e.quotient(3) == 4);
    CHECK(e.quotient(4) == 3);
    CHECK(e.quotient(5) == 4);

    // empty preperiod means integer part zero
    CFExpansion z = periodic_expansion(PeriodicCF{{}, {Int(3)}});
    CHECK(z.integer_part() == 0);
    CHECK(z.quotient(1) == 3);

    CHECK_THROWS_AS(periodic_expansion(PeriodicCF{{Int(1)}, {}}), std::invalid_argument);
}

TEST_CASE("cf_value_interval widths are exactly 1/(q_n q_{n-1})") {
    CFExpansion sqrt2 = periodic_expansion(PeriodicCF{{Int(1)}, {Int(2)}});
    RatInterval v = cf_value_interval(sqrt2, 5);
    // q_1..q_5 = 2, 5, 12, 29, 70
    CHECK(v.hi - v.lo == make_rational(Int(1), Int(70 * 29)));
    CHECK(v.contains(sqrt_interval(Int(2), 128)));

    // finite expansion at or past full depth degenerates to the exact value
    RatInterval exact = cf_value_interval(cf_of_rational(rat(22, 7)), 10);
    CHECK(exact.is_point());
    CHECK(exact.lo == rat(22, 7));
}

TEST_CASE("convergents past the end of a finite expansion throw") {
    CFExpansion cf = cf_of_rational(rat(22, 7));
    CHECK_THROWS_AS(convergents(cf, 5), std::out_of_range);
    CHECK_THROWS_AS(cf.quotient(2), std::out_of_range);
}

TEST_CASE("word_matrix maps letters through the assignment") {
    std::map<char, Int> assign{{'a', Int(1)}, {'b', Int(2)}};
    ConvergentMatrix m = word_matrix("ab", assign);
    ConvergentMatrix direct = product_of({Int(1), Int(2)});
    CHECK(m.q == direct.q);
    CHECK(m.q_prev == direct.q_prev);
    CHECK(m.p == direct.p);
    CHECK(m.p_prev == direct.p_prev);

    CHECK(word_matrix("aba", assign).symmetric());
    CHECK(!word_matrix("ab", assign).symmetric());

    CHECK_THROWS_AS(word_matrix("", assign), std::invalid_argument);
    CHECK_THROWS_AS(word_matrix("ac", assign), std::invalid_argument);
    CHECK_THROWS_AS(word_matrix("a", {{'a', Int(0)}}), std::invalid_argument);
}

TEST_CASE("periodic_cf_value encloses the quadratic limit") {
    Rational tol = make_rational(Int(1), pow2(70));
    RatInterval v = periodic_cf_value(PeriodicCF{{Int(1)}, {Int(2)}}, tol);
    CHECK(v.hi - v.lo <= tol);
    CHECK(v.intersects(sqrt_interval(Int(2), 128)));

    // golden ratio [1; 1, 1, ...] = (1+sqrt 5)/2
    RatInterval g = periodic_cf_value(PeriodicCF{{Int(1)}, {Int(1)}}, tol);
    RatInterval expected = (sqrt_interval(Int(5), 128) + rat(1)) / rat(2);
    CHECK(g.intersects(expected));

    CHECK_THROWS(periodic_cf_value(PeriodicCF{{Int(1)}, {Int(2)}}, rat(0)));
}
