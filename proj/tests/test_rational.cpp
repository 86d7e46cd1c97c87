#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammaforge/rational.hpp"

using namespace gf;

TEST_CASE("arithmetic and normalization")
{
    Rational a(3, 6), b(-2, 4);
    CHECK(a == Rational(1, 2));
    CHECK(b == Rational(-1, 2));
    CHECK((a + b).is_zero());
    CHECK(a * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(7, -14) == Rational(-1, 2));
    CHECK(Rational(5, 3) / Rational(10, 9) == Rational(3, 2));
    CHECK(Rational(-7, 2).floor_ll() == -4);
    CHECK(Rational(7, 2).floor_ll() == 3);
}

TEST_CASE("powers")
{
    CHECK(Rational(3).pow(-3) == Rational(1, 27));
    CHECK(Rational(-1).pow(5) == Rational(-1));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), Error);
}

TEST_CASE("parse and print round trip")
{
    for (const char* s : {"0", "5", "-7", "22/7", "-3/4", "1000000007/3"}) {
        CHECK(Rational::parse(s).to_string() == s);
    }
    CHECK(Rational::parse("4/8") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("x"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
}

TEST_CASE("overflow is detected")
{
    Rational big = Rational::from_int128((int128(1) << 100), 1);
    CHECK_THROWS_AS(big * big, Error);
}

TEST_CASE("gcd and lcm helpers")
{
    CHECK(lcm_abs({-1, 3}) == 3);
    CHECK(lcm_abs({4, 6}) == 12);
    CHECK(gcd_abs({-2, 4}) == 2);
    CHECK(gcd_abs({-1, 3}) == 1);
}
