#include <stdexcept>
#include <unordered_set>

#include <catch2/catch_amalgamated.hpp>

#include "collatz/rational.hpp"

using collatz::bigint;
using collatz::rational;
using collatz::two_adic_valuation;

TEST_CASE("rationals reduce to lowest terms with a positive denominator", "[rational]") {
    CHECK(rational(6, 4).str() == "3/2");
    CHECK(rational(-6, 4).str() == "-3/2");
    CHECK(rational(6, -4).str() == "-3/2");
    CHECK(rational(-6, -4).str() == "3/2");
    CHECK(rational(0, 5).str() == "0");
    CHECK(rational(7).str() == "7");
    CHECK(rational(7).str_ratio() == "7/1");
    CHECK(rational(bigint(10), bigint(-15)).str() == "-2/3");
}

TEST_CASE("zero denominators are rejected", "[rational]") {
    CHECK_THROWS_AS(rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(rational(5) / rational(0), std::domain_error);
}

TEST_CASE("field operations are exact", "[rational]") {
    CHECK(rational(1, 6) + rational(1, 10) == rational(4, 15));
    CHECK(rational(1, 2) - rational(3, 4) == rational(-1, 4));
    CHECK(rational(2, 3) * rational(9, 4) == rational(3, 2));
    CHECK(rational(1, 3) / rational(5, 6) == rational(2, 5));
    CHECK((-rational(3, 7)).str() == "-3/7");
    CHECK(rational(1, 3) + rational(-1, 3) == rational(0));
}

TEST_CASE("ordering is the numeric order", "[rational]") {
    CHECK(rational(1, 3) < rational(1, 2));
    CHECK(rational(-1, 2) < rational(-1, 3));
    CHECK(rational(-5) < rational(-7, 5));
    CHECK(rational(2, 4) <= rational(1, 2));
    CHECK(rational(7, 5) > rational(0));
    CHECK(rational(-3).sign() == -1);
    CHECK(rational(0).sign() == 0);
    CHECK(rational(0).is_zero());
    CHECK(rational(8, 4).is_integer());
    CHECK_FALSE(rational(9, 4).is_integer());
}

TEST_CASE("parsing accepts integers, fractions, and decimals", "[rational]") {
    CHECK(rational::parse("5") == rational(5));
    CHECK(rational::parse("-7/5") == rational(-7, 5));
    CHECK(rational::parse("3/6") == rational(1, 2));
    CHECK(rational::parse("0.25") == rational(1, 4));
    CHECK(rational::parse("-2.50") == rational(-5, 2));
    CHECK(rational::parse("-0.001") == rational(-1, 1000));
}

TEST_CASE("parse failures name the offending text", "[rational]") {
    for (const char* bad : {"", "x", "1/", "/3", "1.2.3", "++1", "1 /2", "2.", "-"}) {
        CHECK_THROWS_MATCHES(rational::parse(bad), std::invalid_argument,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring(bad)));
    }
    CHECK_THROWS_AS(rational::parse("1/0"), std::domain_error);
}

TEST_CASE("decimal rendering rounds to nearest, half away from zero", "[rational]") {
    CHECK(rational(1, 3).decimal(12) == "0.333333333333");
    CHECK(rational(-5, 3).decimal(12) == "-1.66666666667");
    CHECK(rational(5, 2).decimal(1) == "3");
    CHECK(rational(-5, 2).decimal(1) == "-3");
    CHECK(rational(1, 8).decimal(2) == "0.13");
    CHECK(rational(999, 1000).decimal(2) == "1");
    CHECK(rational(95, 10).decimal(1) == "10");
    CHECK(rational(1, 4).decimal(3) == "0.25");
    CHECK(rational(10000).decimal(2) == "10000");
    CHECK(rational(0).decimal(5) == "0");
    CHECK(rational(1, 1000000).decimal(3) == "0.000001");
    CHECK_THROWS_AS(rational(1, 3).decimal(0), std::domain_error);
}

TEST_CASE("equal values collide in hashed containers", "[rational]") {
    std::unordered_set<rational> set;
    set.insert(rational(1, 2));
    set.insert(rational(2, 4));
    set.insert(rational(1, 3));
    CHECK(set.size() == 2);
}

TEST_CASE("2-adic valuation counts trailing zero bits", "[rational]") {
    CHECK(two_adic_valuation(bigint(1)) == 0);
    CHECK(two_adic_valuation(bigint(12)) == 2);
    CHECK(two_adic_valuation(bigint(-20)) == 2);
    CHECK(two_adic_valuation(bigint(1) << 40) == 40);
    CHECK_THROWS_AS(two_adic_valuation(bigint(0)), std::domain_error);
}
