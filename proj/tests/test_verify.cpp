#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "collatz/verify.hpp"

using collatz::suite_result;
using collatz::verify;
using collatz::verify_report;

TEST_CASE("all identity suites pass at a small scale", "[verify]") {
    const verify_report r = verify(3);
    CHECK(r.depth == 3);
    CHECK(r.sequences == 15);
    CHECK(r.passed());
    REQUIRE(r.suites.size() == 8);
    for (const suite_result& s : r.suites) {
        INFO(s.name);
        CHECK(s.failed == 0);
        CHECK(s.checked == (s.name == "collinearity" ? 14u : 15u));
    }
    CHECK(r.d0_simple_matches == 1);  // only the empty sequence
    REQUIRE_FALSE(r.d0_mismatch_samples.empty());
}

TEST_CASE("depth is bounded to keep runs tractable", "[verify]") {
    CHECK_THROWS_AS(verify(0), std::domain_error);
    CHECK_THROWS_AS(verify(15), std::domain_error);
}
