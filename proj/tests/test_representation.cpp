#include <set>
#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "collatz/representation.hpp"

using collatz::eventually_periodic;
using collatz::finite_seq;
using collatz::is_periodic;
using collatz::odd_rational;
using collatz::periodic_seq;
using collatz::rational;
using collatz::represent;
using collatz::represent_result;
using collatz::truncated;

namespace {

eventually_periodic repr_of(const odd_rational& a) {
    const represent_result r = represent(a, 10000);
    REQUIRE(is_periodic(r));
    return periodic_seq(r);
}

}  // namespace

TEST_CASE("known representations come out canonical", "[represent]") {
    CHECK(repr_of(odd_rational(1)) == eventually_periodic{{}, {2}});
    CHECK(repr_of(odd_rational(-1)) == eventually_periodic{{}, {1}});
    CHECK(repr_of(odd_rational(rational(5, 3))) == eventually_periodic{{1, 1, 4}, {2}});
    CHECK(repr_of(odd_rational(rational(-7, 5))) == eventually_periodic{{4, 1}, {3}});
    CHECK(repr_of(odd_rational(-7)) == eventually_periodic{{}, {2, 1}});
    CHECK(repr_of(odd_rational(-5)) == eventually_periodic{{}, {1, 2}});
    CHECK(repr_of(odd_rational(3)) == eventually_periodic{{1, 4}, {2}});
    CHECK(repr_of(odd_rational(7)) == eventually_periodic{{1, 1, 2, 3, 4}, {2}});
    CHECK(repr_of(odd_rational(-17)) == eventually_periodic{{}, {1, 1, 1, 2, 1, 1, 4}});
}

TEST_CASE("a too-small budget reports the progress made", "[represent]") {
    const represent_result r = represent(odd_rational(7), 2);
    REQUIRE_FALSE(is_periodic(r));
    CHECK(truncated(r).prefix == finite_seq{1, 1});
    CHECK(truncated(r).last_iterate == odd_rational(17));
    CHECK(truncated(r).steps_used == 2);

    CHECK(is_periodic(represent(odd_rational(7), 7)));
    CHECK_THROWS_AS(represent(odd_rational(7), 0), std::domain_error);
}

TEST_CASE("recurrence at the start yields an empty preperiod", "[represent]") {
    const eventually_periodic s = repr_of(odd_rational(-5));
    CHECK(s.preperiod.empty());
    CHECK(s.cycle == finite_seq{1, 2});
}

TEST_CASE("odd integers up to 100 that sit on a loop are exactly the known ones",
          "[represent]") {
    const std::set<long> on_loop{1, -1, -5, -7, -17, -25, -37, -41, -55, -61, -91};
    for (long x = -99; x <= 99; x += 2) {
        const represent_result r = represent(odd_rational(rational(x)), 100);
        REQUIRE(is_periodic(r));
        INFO(x);
        CHECK(periodic_seq(r).preperiod.empty() == (on_loop.count(x) == 1));
    }
}
