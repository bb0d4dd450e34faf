#include <random>
#include <sstream>

#include "boxcalc/errors.hpp"
#include "boxcalc/rational.hpp"
#include "doctest.h"

using boxcalc::Integer;
using boxcalc::ParseError;
using boxcalc::Rational;

TEST_CASE("construction always lands in canonical form") {
    CHECK(Rational(Integer(2), Integer(4)) == Rational(1, 2));
    CHECK(Rational(Integer(-2), Integer(4)) == Rational(-1, 2));
    CHECK(Rational(Integer(2), Integer(-4)) == Rational(-1, 2));
    CHECK(Rational(Integer(-2), Integer(-4)) == Rational(1, 2));
    CHECK(Rational(Integer(0), Integer(-7)) == Rational(0));

    const Rational x(Integer(6), Integer(-4));
    CHECK(x.numerator() == -3);
    CHECK(x.denominator() == 2);

    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("arithmetic matches hand results") {
    const Rational a(1, 3);
    const Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("ring identities hold on randomized triples") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        const auto draw = [&rng] {
            const auto num = static_cast<long long>(rng() % 201) - 100;
            const auto den = static_cast<long long>(rng() % 40) + 1;
            return Rational(Integer(num), Integer(den));
        };
        const Rational a = draw();
        const Rational b = draw();
        const Rational c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("comparisons are exact") {
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 4) > Rational(3, 4));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(2, 4) >= Rational(1, 2));
    CHECK(Rational(1, 3) != Rational(333333, 1000000));
}

TEST_CASE("to_string omits unit denominators") {
    CHECK(Rational(-3, 2).to_string() == "-3/2");
    CHECK(Rational(1).to_string() == "1");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(-7).to_string() == "-7");
    CHECK(Rational(473, 750).to_string() == "473/750");

    std::ostringstream os;
    os << Rational(-5, 4);
    CHECK(os.str() == "-5/4");
}

TEST_CASE("parse accepts exactly the serialized grammar") {
    CHECK(Rational::parse("-3/2") == Rational(-3, 2));
    CHECK(Rational::parse("1") == Rational(1));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("123456789012345678901234567890/7") ==
          Rational(Integer("123456789012345678901234567890"), Integer(7)));

    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("/2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse(" 1"), ParseError);
    CHECK_THROWS_AS(Rational::parse("+1"), ParseError);
}

TEST_CASE("parse round-trips randomized values") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto num = static_cast<long long>(rng() % 20001) - 10000;
        const auto den = static_cast<long long>(rng() % 999) + 1;
        const Rational x{Integer(num), Integer(den)};
        CHECK(Rational::parse(x.to_string()) == x);
    }
}

TEST_CASE("abs, pow, floor, ceil") {
    CHECK(boxcalc::abs(Rational(-7, 3)) == Rational(7, 3));
    CHECK(boxcalc::abs(Rational(7, 3)) == Rational(7, 3));

    CHECK(boxcalc::pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(boxcalc::pow(Rational(5, 2), 0) == Rational(1));
    CHECK(boxcalc::pow(Rational(0), 0) == Rational(1));  // the 0^0 = 1 convention
    CHECK(boxcalc::pow(Rational(0), 5) == Rational(0));
    CHECK(boxcalc::pow(Rational(2), 20) == Rational(1048576));

    CHECK(boxcalc::floor(Rational(7, 2)) == 3);
    CHECK(boxcalc::floor(Rational(-7, 2)) == -4);
    CHECK(boxcalc::floor(Rational(4)) == 4);
    CHECK(boxcalc::ceil(Rational(7, 2)) == 4);
    CHECK(boxcalc::ceil(Rational(-7, 2)) == -3);
    CHECK(boxcalc::ceil(Rational(-4)) == -4);
}

TEST_CASE("helpers report sign and integrality") {
    CHECK(Rational(0).is_zero());
    CHECK(!Rational(1, 5).is_zero());
    CHECK(Rational(4, 2).is_integer());
    CHECK(!Rational(1, 2).is_integer());
    CHECK(Rational(-1, 2).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(9).sign() == 1);
}
