#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gammaforge/character.hpp"
#include "gammaforge/identity.hpp"

using namespace gf;

namespace {
const LocalField R = LocalField::real();
const LocalField C = LocalField::complex_field();

Character ch(const LocalField& f, long long n, long long d, long long tw)
{
    return Character(f, Rational(n, d), tw);
}
} // namespace

TEST_CASE("multiplication")
{
    CHECK(mul(ch(R, 1, 1, 1), ch(R, 2, 1, 0)) == ch(R, 3, 1, 1));
    CHECK(mul(ch(R, 1, 1, 1), ch(R, 0, 1, 1)) == ch(R, 1, 1, 0)); // twist mod 2
    CHECK(mul(Character(C, Rational(1), -2), Character(C, Rational(1), 2)) == Character::nu(C));
    CHECK_THROWS_AS(mul(ch(R, 1, 1, 0), ch(C, 1, 1, 0)), Error);
}

TEST_CASE("nm_power and pow")
{
    CHECK(nm_power(C, Rational(1, 3)) == Character(C, Rational(2, 3), 0));
    CHECK(nm_power(R, Rational(2, 3)) == Character(R, Rational(2, 3), 0));
    CHECK(nm_power(R, Rational(1, 3)) == Character(R, Rational(1, 3), 1));
    CHECK(pow(Character(R, Rational(-1, 3), 0), 3) == Character(R, Rational(-1), 0));
    CHECK_THROWS_AS(nm_power(R, Rational(1, 2)), Error); // even root over R
    CHECK(nm_power(LocalField::nonarch(3), Rational(1, 2)) ==
          Character(LocalField::nonarch(3), Rational(1, 2), 0));
}

TEST_CASE("real_part")
{
    CHECK(real_part(ch(R, 1, 1, 1)) == Rational(1));
    CHECK(real_part(Character(C, Rational(2), 0)) == Rational(1));
    CHECK(real_part(Character(C, Rational(-1), 3)) == Rational(-1, 2));
}

TEST_CASE("singular characters")
{
    CHECK(is_singular(Character(R, Rational(-1), 0)));
    CHECK(is_singular(Character(R, Rational(-2), 1))); // = nu^{-1} x^{-1}
    CHECK_FALSE(is_singular(Character(C, Rational(-2), 1))); // parity fails
    CHECK(is_singular(Character(C, Rational(-2), 0)));
    CHECK_FALSE(is_singular(Character(R, Rational(-3, 2), 0)));
    CHECK_THROWS_AS(is_singular(Character(LocalField::nonarch(2), Rational(-1), 0)), Error);
}

TEST_CASE("strong regularity")
{
    CHECK_FALSE(is_strongly_regular(Character(R, Rational(0), 1)));  // x/|x|
    CHECK_FALSE(is_strongly_regular(Character(R, Rational(-2), 0))); // x^{-2}
    CHECK(is_strongly_regular(Character(R, Rational(1, 2), 0)));
    CHECK(is_strongly_regular(Character(R, Rational(3), 1))); // x^3
    CHECK_FALSE(is_strongly_regular(Character(C, Rational(-1), 1))); // x^0 xbar^{-1}
    CHECK(is_strongly_regular(Character(C, Rational(3), 1)));
    CHECK_THROWS_AS(is_strongly_regular(Character(R, Rational(-1), 0)), Error); // singular input
}

TEST_CASE("singular and strongly regular are disjoint (exhaustive scan)")
{
    for (const LocalField& F : {R, C}) {
        for (long long k = -24; k <= 24; ++k) {
            for (long long n = -3; n <= 3; ++n) {
                Character c(F, Rational(k, 6), n);
                if (is_singular(c)) continue; // strong regularity undefined there
                (void)is_strongly_regular(c); // must not throw for nonsingular
            }
        }
    }
}

TEST_CASE("group laws on random rational characters")
{
    unsigned long long state = 99;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return (long long)(state >> 40);
    };
    for (int i = 0; i < 200; ++i) {
        const LocalField& F = (i % 2) ? R : C;
        Character a(F, Rational(next() % 13 - 6, 1 + next() % 5), next() % 5 - 2);
        Character b(F, Rational(next() % 13 - 6, 1 + next() % 5), next() % 5 - 2);
        Character c(F, Rational(next() % 13 - 6, 1 + next() % 5), next() % 5 - 2);
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(a, inv(a)) == Character::trivial(F));
        CHECK(pow(a, 3) == mul(a, mul(a, a)));
        CHECK(real_part(mul(a, b)) == real_part(a) + real_part(b));
    }
}

TEST_CASE("evaluation is multiplicative")
{
    Character a(R, Rational(-1, 3), 1);
    for (double x : {0.7, -1.3, 2.0}) {
        for (double y : {-0.4, 1.9}) {
            auto lhs = evaluate(a, x * y);
            auto rhs = evaluate(a, x) * evaluate(a, y);
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }
    Character b(C, Rational(1, 2), -2);
    std::complex<double> z1{0.3, -1.1}, z2{-0.8, 0.25};
    CHECK(std::abs(evaluate(b, z1 * z2) - evaluate(b, z1) * evaluate(b, z2)) < 1e-12);
}

TEST_CASE("evaluation examples")
{
    CHECK(std::abs(evaluate(Character(R, Rational(-1, 3), 0), -8.0) -
                   std::complex<double>(0.5, 0.0)) < 1e-12);
    CHECK(std::abs(evaluate(Character(C, Rational(0), 1), std::complex<double>(0.0, 1.0)) -
                   std::complex<double>(0.0, 1.0)) < 1e-12);
    Character nu_half(LocalField::nonarch(3), Rational(1, 2), 0);
    CHECK(std::abs(evaluate_nonarch(nu_half, 2) - std::complex<double>(1.0 / 3.0, 0.0)) < 1e-12);
    CHECK_THROWS_AS(evaluate(Character(R, Rational(1), 0), 0.0), Error);
}

TEST_CASE("JSON round trip")
{
    for (Character c : {Character(R, Rational(-4, 3), 1), Character(C, Rational(5, 2), -7),
                        Character(LocalField::nonarch(9), Rational(1, 3), 0)}) {
        Character back = character_from_json(character_to_json(c));
        CHECK(back == c);
    }
}
