#include <doctest.h>

#include "rbsys/errors.hpp"
#include "rbsys/rational.hpp"

using namespace rbsys;

TEST_CASE("canonical form") {
    Rational q(-2, 4);
    CHECK(q.str() == "-1/2");
    CHECK(Rational(6, 3) == Rational(2));
    CHECK(Rational(0, 7).is_zero());
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(5).pretty() == "5");
    CHECK(Rational(1, 3).pretty() == "1/3");
}

TEST_CASE("arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK((a + b) == Rational(1, 2));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 18));
    CHECK((a / b) == Rational(2));
    CHECK((-a).str() == "-1/3");
    CHECK_THROWS_AS(a / Rational(0), InputError);
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK(Rational::parse("+2/4") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("x"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/"), InputError);
    CHECK_THROWS_AS(Rational::parse(""), InputError);
    CHECK_THROWS_AS(Rational::parse("1.5"), InputError);
}

TEST_CASE("big values stay exact") {
    Rational x(1);
    for (int i = 2; i <= 40; ++i) x *= Rational(i, i + 1);
    // 1/2 * 2/3 * ... telescopes only for the (i, i+1) pattern: product = 2/41.
    CHECK(x == Rational(2, 41));
    CHECK(sign_pow(-3) == Rational(-1));
    CHECK(sign_pow(4) == Rational(1));
}
