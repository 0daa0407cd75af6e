#include "doctest.h"

#include <btoep/rational.hpp>

#include <cmath>
#include <random>
#include <stdexcept>

using btoep::Int;
using btoep::Rational;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
    bool dec = false;

    CHECK(btoep::parse_rational("3/4", &dec) == Rational(3, 4));
    CHECK_FALSE(dec);
    CHECK(btoep::parse_rational("-7/2") == Rational(-7, 2));
    CHECK(btoep::parse_rational("2/4") == Rational(1, 2));  // reduced on construction
    CHECK(btoep::parse_rational("3/-6") == Rational(-1, 2));  // sign moves to the numerator
    CHECK(btoep::parse_rational("-3/-6") == Rational(1, 2));
    CHECK(btoep::parse_rational("5") == Rational(5));
    CHECK(btoep::parse_rational("-12") == Rational(-12));
    CHECK(btoep::parse_rational("123456789012345678901234567890/7") ==
          Rational(Int("123456789012345678901234567890"), Int(7)));

    // decimal entry embeds the binary64 value exactly and sets the flag
    CHECK(btoep::parse_rational("0.25", &dec) == Rational(1, 4));
    CHECK(dec);
    const Rational tenth = btoep::parse_rational("0.1", &dec);
    CHECK(dec);
    CHECK(tenth != Rational(1, 10));  // 0.1 is not a dyadic rational
    CHECK(abs(tenth - Rational(1, 10)) < Rational(1, 1000000000000000));
    CHECK(btoep::parse_rational("1e-3") == btoep::rational_from_double(1e-3));
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(btoep::parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(btoep::parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(btoep::parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(btoep::parse_rational("/3"), std::invalid_argument);
    CHECK_THROWS_AS(btoep::parse_rational("3/"), std::invalid_argument);
    CHECK_THROWS_AS(btoep::parse_rational("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(btoep::parse_rational("5x"), std::invalid_argument);
    CHECK_THROWS_AS(btoep::parse_rational("--4"), std::invalid_argument);
}

TEST_CASE("rational_from_double is an exact embedding") {
    CHECK(btoep::rational_from_double(0.5) == Rational(1, 2));
    CHECK(btoep::rational_from_double(-0.75) == Rational(-3, 4));
    CHECK(btoep::rational_from_double(0.0) == Rational(0));
    CHECK(btoep::rational_from_double(3.0) == Rational(3));
    CHECK_THROWS_AS(btoep::rational_from_double(1.0 / 0.0), std::invalid_argument);

    // the embedding loses nothing: converting back reproduces the bits
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-40, 40);
    for (int i = 0; i < 200; ++i) {
        const double x = std::ldexp(mant(rng), expo(rng));
        CHECK(btoep::to_double(btoep::rational_from_double(x)) == x);
    }
}

TEST_CASE("to_string renders canonically and round-trips") {
    CHECK(btoep::to_string(Rational(-1, 2)) == "-1/2");
    CHECK(btoep::to_string(Rational(7)) == "7");
    CHECK(btoep::to_string(Rational(0)) == "0");
    CHECK(btoep::to_string(Rational(4, 6)) == "2/3");

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    std::uniform_int_distribution<long long> q(1, 1000000);
    for (int i = 0; i < 100; ++i) {
        const Rational x(d(rng), q(rng));
        CHECK(btoep::parse_rational(btoep::to_string(x)) == x);
    }
}

TEST_CASE("numerator and denominator are canonical") {
    // negative signs end up on the numerator whichever way they come in
    const Rational x = Rational(3) / Rational(-6);
    CHECK(x == Rational(-1, 2));
    CHECK(btoep::num(x) == -1);
    CHECK(btoep::den(x) == 2);  // denominator always positive
    CHECK(btoep::sign(x) == -1);
    const Rational y = btoep::parse_rational("3/-6");
    CHECK(btoep::num(y) == -1);
    CHECK(btoep::den(y) == 2);
    CHECK(btoep::sign(Rational(0)) == 0);
    CHECK(btoep::sign(Int(-5)) == -1);
}

TEST_CASE("arithmetic is exact: field laws hold bit-for-bit") {
    std::mt19937_64 rng(123457);
    std::uniform_int_distribution<long long> d(-1000000000, 1000000000);
    std::uniform_int_distribution<long long> q(1, 1000000000);
    const auto rand_rat = [&] { return Rational(d(rng), q(rng)); };
    for (int i = 0; i < 200; ++i) {
        const Rational a = rand_rat(), b = rand_rat(), c = rand_rat();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        if (b != 0) CHECK((a / b) * b == a);
        CHECK(a - a == 0);
    }
}
