#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "trimetric/errors.hpp"
#include "trimetric/rational.hpp"

using trimetric::ParseError;
using trimetric::Rational;

TEST_CASE("parse accepts integers, fractions and decimals") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("6/8") == Rational(3, 4));
    CHECK(Rational::parse("0/5") == Rational(0));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-1.5") == Rational(-3, 2));
    CHECK(Rational::parse("2.") == Rational(2));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("  5/2\t") == Rational(5, 2));
}

TEST_CASE("parse rejects malformed text") {
    for (const char* bad : {"", "   ", "-", "+", "1/0", "1//2", "a", "1/2/3", "1e5",
                            "1.5.2", "nan", "inf", "1 / 2", "0x10", "--3", ".", "3/-4"}) {
        CHECK_THROWS_AS(Rational::parse(bad), ParseError);
    }
}

TEST_CASE("str prints lowest terms, integers without denominator") {
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(6, 8).str() == "3/4");
    CHECK(Rational(-6, 8).str() == "-3/4");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(5, -10).str() == "-1/2");
    std::ostringstream os;
    os << Rational(7, 2);
    CHECK(os.str() == "7/2");
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    // The classic float trap: exact rationals get it right.
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));

    Rational big = Rational::parse("1000000000000000000000000/3");
    CHECK(big * Rational(3) == Rational::parse("1000000000000000000000000"));
    CHECK((big - big).is_zero());
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), ParseError);
    CHECK_THROWS_AS(Rational(1, 0), ParseError);
}

TEST_CASE("comparisons and helpers") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(5, 10) == Rational(1, 2));
    CHECK(Rational(2) >= Rational(2));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(trimetric::abs(Rational(-5, 2)) == Rational(5, 2));
    CHECK(trimetric::abs(Rational(5, 2)) == Rational(5, 2));
    CHECK(trimetric::min(Rational(1), Rational(2)) == Rational(1));
    CHECK(trimetric::max(Rational(1), Rational(2)) == Rational(2));
    CHECK(Rational(3).is_positive());
    CHECK(Rational(-3).is_negative());
    CHECK(Rational(0).is_zero());
}
