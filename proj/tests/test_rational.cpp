#include "doctest.h"
#include "rational.hpp"

using namespace czlab;

TEST_CASE("rational parsing accepts p/q and integers") {
    CHECK(parse_rational("7/10") == Rational(7, 10));
    CHECK(parse_rational("-3/9") == Rational(-1, 3));
    CHECK(parse_rational("4") == Rational(4));
    CHECK(parse_rational("+2/4") == Rational(1, 2));
    CHECK(parse_rational("0") == 0);
}

TEST_CASE("rational parsing rejects malformed input") {
    for (const char* bad : {"", "1.5", "a/b", "1/", "/2", "1/0", "1 / 2", "1e3"}) {
        CHECK_THROWS_AS(parse_rational(bad), Error);
    }
}

TEST_CASE("rat_str round trips through parse_rational") {
    for (const char* text : {"7/10", "-167/100", "0", "5", "-1/3"}) {
        CHECK(rat_str(parse_rational(text)) == text);
    }
}

TEST_CASE("floor and modular reduction") {
    CHECK(floor_i64(Rational(7, 10)) == 0);
    CHECK(floor_i64(Rational(-7, 10)) == -1);
    CHECK(floor_i64(Rational(21, 10)) == 2);
    CHECK(mod_period(Rational(21, 10), 2) == Rational(1, 10));
    CHECK(mod_period(Rational(-3, 10), 2) == Rational(17, 10));
    CHECK(mod_period(Rational(4), 2) == 0);
    CHECK(reduce_symmetric_mod2(Rational(6, 5)) == Rational(-4, 5));
    CHECK(reduce_symmetric_mod2(Rational(3, 10)) == Rational(3, 10));
    CHECK(reduce_symmetric_mod2(Rational(-12, 5)) == Rational(-2, 5));
    CHECK(reduce_symmetric_mod2(Rational(1)) == Rational(1));
}
