#include <dio/rational.hpp>

#include <doctest.h>

#include <stdexcept>

#include "test_util.hpp"

using namespace dio;
using dio::test::rat;

TEST_CASE("make_rational canonicalizes sign and gcd") {
    Rational r = make_rational(4, -6);
    CHECK(r == rat(-2, 3));
    CHECK(r.get_num() == -2);
    CHECK(r.get_den() == 3);

    CHECK(make_rational(0, -5) == 0);
    CHECK(make_rational(0, -5).get_den() == 1);
    CHECK(make_rational(Int(21), Int(14)) == rat(3, 2));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("floor and ceil split at non-integers only") {
    CHECK(floor_int(rat(7, 3)) == 2);
    CHECK(ceil_int(rat(7, 3)) == 3);
    CHECK(floor_int(rat(-7, 3)) == -3);
    CHECK(ceil_int(rat(-7, 3)) == -2);
    CHECK(floor_int(rat(4)) == 4);
    CHECK(ceil_int(rat(4)) == 4);
}

TEST_CASE("nearest_int_dist pins and range") {
    CHECK(nearest_int_dist(rat(7, 3)) == rat(1, 3));
    CHECK(nearest_int_dist(rat(1, 2)) == rat(1, 2));
    CHECK(nearest_int_dist(rat(-5, 4)) == rat(1, 4));
    CHECK(nearest_int_dist(rat(3)) == 0);

    dio::test::Rng rng(2024);
    for (int i = 0; i < 500; ++i) {
        Rational x = rng.rational(400);
        Rational d = nearest_int_dist(x);
        CHECK(d >= 0);
        CHECK(d <= rat(1, 2));
        // d is attained by one of the two neighbouring integers
        Rational down = x - floor_int(x), up = ceil_int(x) - x;
        CHECK((d == down || d == up));
        CHECK(d <= down);
        CHECK(d <= up);
    }
}

TEST_CASE("scaled floor/ceil bracket x*2^bits") {
    CHECK(floor_scaled(rat(1, 3), 4) == 5);   // 16/3 = 5.33..
    CHECK(ceil_scaled(rat(1, 3), 4) == 6);
    CHECK(floor_scaled(rat(3, 4), 2) == 3);   // exact dyadic: floor == ceil
    CHECK(ceil_scaled(rat(3, 4), 2) == 3);
    CHECK(floor_scaled(rat(-1, 3), 4) == -6);
    CHECK(ceil_scaled(rat(-1, 3), 4) == -5);

    dio::test::Rng rng(7);
    for (int i = 0; i < 300; ++i) {
        Rational x = rng.rational(1000);
        long bits = rng.pick(0, 40);
        Int f = floor_scaled(x, bits), c = ceil_scaled(x, bits);
        Rational scaled = x * Rational(pow2(bits));
        CHECK(Rational(f) <= scaled);
        CHECK(Rational(c) >= scaled);
        CHECK(c - f <= 1);
    }
}

TEST_CASE("pow2") {
    CHECK(pow2(0) == 1);
    CHECK(pow2(10) == 1024);
    Int big = 1;
    big <<= 200;
    CHECK(pow2(200) == big);
}

TEST_CASE("fraction strings round-trip exactly") {
    CHECK(to_fraction_string(rat(-2, 3)) == "-2/3");
    CHECK(to_fraction_string(rat(5)) == "5");
    CHECK(to_fraction_string(rat(0)) == "0");

    dio::test::Rng rng(99);
    for (int i = 0; i < 300; ++i) {
        Rational x = rng.rational(100000);
        CHECK(rational_from_string(to_fraction_string(x)) == x);
    }
}

TEST_CASE("decimal strings: fixed pins") {
    CHECK(to_decimal_string(rat(1, 3)) == "0.333333333333333");
    CHECK(to_decimal_string(rat(1, 2)) == "0.5");
    CHECK(to_decimal_string(rat(2)) == "2");
    CHECK(to_decimal_string(rat(0)) == "0");
    CHECK(to_decimal_string(rat(-22, 7), 6) == "-3.14286");
    CHECK(to_decimal_string(rat(1, 1000000), 3) == "1e-06");
    CHECK(to_decimal_string(rat(123456789), 4) == "1.235e+08");
}

TEST_CASE("decimal strings parse back close to the value") {
    dio::test::Rng rng(123);
    for (int i = 0; i < 200; ++i) {
        Rational x = rng.rational(5000);
        std::string s = to_decimal_string(x, 15);
        if (s.find('e') != std::string::npos) continue;  // exponent form: not parseable back
        Rational back = rational_from_string(s);
        Rational err = back - x;
        if (err < 0) err = -err;
        // 15 significant digits leave at most ~1e-13 absolute error at this magnitude
        CHECK(err <= rat(1, 10000000000));
    }
}

TEST_CASE("rational_from_string accepts integers, fractions, decimals") {
    CHECK(rational_from_string("123") == 123);
    CHECK(rational_from_string("-4/7") == rat(-4, 7));
    CHECK(rational_from_string("0.618") == rat(309, 500));
    CHECK(rational_from_string("-0.25") == rat(-1, 4));

    CHECK_THROWS(rational_from_string(""));
    CHECK_THROWS(rational_from_string("abc"));
    CHECK_THROWS(rational_from_string("1/0"));
}
