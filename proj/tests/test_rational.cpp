#include <catch2/catch_amalgamated.hpp>

#include "nlie/prng.hpp"
#include "nlie/rational.hpp"

using nlie::Rational;

TEST_CASE("rationals are stored reduced with positive denominator") {
    Rational a(6, 4);
    CHECK(a.numerator() == 3);
    CHECK(a.denominator() == 2);

    Rational b(3, -6);
    CHECK(b.numerator() == -1);
    CHECK(b.denominator() == 2);

    Rational z(0, 7);
    CHECK(z.is_zero());
    CHECK(z.denominator() == 1);
    CHECK(z.str() == "0");
}

TEST_CASE("arithmetic") {
    Rational half(1, 2), third(1, 3);
    CHECK((half + third) == Rational(5, 6));
    CHECK((half - third) == Rational(1, 6));
    CHECK((half * third) == Rational(1, 6));
    CHECK((half / third) == Rational(3, 2));
    CHECK(-half == Rational(-1, 2));
    CHECK(half < Rational(2, 3));
    CHECK_THROWS(half / Rational(0));
}

TEST_CASE("canonical literal syntax round-trips") {
    for (const char* s : {"0", "1", "-1", "7", "-22", "1/2", "-3/4", "355/113"}) {
        auto r = Rational::parse(s);
        REQUIRE(r.has_value());
        CHECK(r->str() == s);
    }
}

TEST_CASE("strict parser rejects non-canonical text") {
    for (const char* s : {"", "-", "+1", "2/4", "3/1", "1/-2", "-0", "01", "1/02",
                          "1/0", "a", "1 /2", "1/", "/2"}) {
        CAPTURE(s);
        CHECK_FALSE(Rational::parse(s).has_value());
    }
}

TEST_CASE("parse of str is the identity on random rationals") {
    nlie::SplitMix64 rng(42);
    for (int i = 0; i < 200; ++i) {
        long num = static_cast<long>(rng.next_below(20001)) - 10000;
        long den = static_cast<long>(rng.next_below(999)) + 1;
        Rational r(num, den);
        auto back = Rational::parse(r.str());
        REQUIRE(back.has_value());
        CHECK(*back == r);
    }
}

TEST_CASE("exact square roots") {
    CHECK(Rational(9, 4).exact_sqrt() == Rational(3, 2));
    CHECK(Rational(0).exact_sqrt() == Rational(0));
    CHECK(Rational(1).exact_sqrt() == Rational(1));
    CHECK_FALSE(Rational(2).exact_sqrt().has_value());
    CHECK_FALSE(Rational(-4).exact_sqrt().has_value());
    Rational big = Rational(123456789L) * Rational(123456789L) / Rational(49);
    CHECK(big.exact_sqrt() == Rational(123456789L, 7));
}
