#include <doctest.h>

#include <random>

#include "medgeo/rational.hpp"

using medgeo::Rat;

TEST_CASE("rational parsing and printing round-trips") {
    CHECK(Rat::parse("3/2").str() == "3/2");
    CHECK(Rat::parse("4/2").str() == "2");
    CHECK(Rat::parse("-6/4").str() == "-3/2");
    CHECK(Rat::parse("0").str() == "0");
    CHECK(Rat::parse("+7").str() == "7");
    Rat big = Rat::parse("123456789012345678901234567890/7");
    CHECK(big * Rat(7) == Rat::parse("123456789012345678901234567890"));
    CHECK_THROWS_AS(Rat::parse("1.5"), medgeo::invalid_input);
    CHECK_THROWS_AS(Rat::parse("1/0"), medgeo::invalid_input);
    CHECK_THROWS_AS(Rat::parse(""), medgeo::invalid_input);
    CHECK_THROWS_AS(Rat::parse("1/"), medgeo::invalid_input);
    CHECK_THROWS_AS(Rat::parse("a/b"), medgeo::invalid_input);
}

TEST_CASE("rational invariants: reduced form, positive denominator") {
    Rat r(-4, -6);
    CHECK(r.num() == 2);
    CHECK(r.den() == 3);
    Rat s(3, -9);
    CHECK(s.str() == "-1/3");
    CHECK(s.den() > 0);
}

TEST_CASE("rational arithmetic is exact") {
    Rat third(1, 3), sixth(1, 6);
    CHECK((third + sixth).str() == "1/2");
    CHECK((third - sixth).str() == "1/6");
    CHECK((third * sixth).str() == "1/18");
    CHECK((third / sixth).str() == "2");
    CHECK_THROWS_AS(third / Rat(0), medgeo::invalid_input);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Rat a(long(rng() % 2000) - 1000, 1 + long(rng() % 50));
        Rat b(long(rng() % 2000) - 1000, 1 + long(rng() % 50));
        Rat c(long(rng() % 2000) - 1000, 1 + long(rng() % 50));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == Rat(0));
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("decimal rendering rounds half away from zero") {
    CHECK(Rat(1, 3).decimal(4) == "0.3333");
    CHECK(Rat(2, 3).decimal(4) == "0.6667");
    CHECK(Rat(-1, 2).decimal(0) == "-1");
    CHECK(Rat(5, 2).decimal(1) == "2.5");
    CHECK(Rat(3).decimal(2) == "3.00");
}

TEST_CASE("median3 picks the middle value") {
    Rat a(1), b(2), c(3);
    CHECK(medgeo::median3(a, b, c) == b);
    CHECK(medgeo::median3(c, a, b) == b);
    CHECK(medgeo::median3(b, b, c) == b);
    CHECK(medgeo::median3(a, a, a) == a);
    CHECK(medgeo::median3(Rat(-1, 2), Rat(1, 3), Rat(0)) == Rat(0));
}

TEST_CASE("dyadic constructor") {
    CHECK(Rat::dyadic(mpz_class(3), 2).str() == "3/4");
    CHECK(Rat::dyadic(mpz_class(4), 2).str() == "1");
    CHECK(Rat::dyadic(mpz_class(1), 48).str() == "1/281474976710656");
}
