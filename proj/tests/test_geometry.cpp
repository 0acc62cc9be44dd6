#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "collatz/geometry.hpp"

using collatz::finite_seq;
using collatz::fractal_graph;
using collatz::invert;
using collatz::invert_cycle;
using collatz::make_fractal_graph;
using collatz::odd_rational;
using collatz::periodic_value_via_line;
using collatz::point;
using collatz::point_of;
using collatz::rational;

TEST_CASE("a sequence's point pairs its two tail closures", "[geometry]") {
    CHECK(point_of({}) == point{odd_rational(1), odd_rational(-1)});
    CHECK(point_of({1}) == point{odd_rational(rational(1, 3)), odd_rational(-1)});
    CHECK(point_of({2}) == point{odd_rational(1), odd_rational(rational(-5, 3))});
    CHECK(point_of({1, 2}) ==
          point{odd_rational(rational(1, 3)), odd_rational(rational(-13, 9))});
    CHECK_THROWS_AS(point_of({1, 3}), std::domain_error);
}

TEST_CASE("graph layers enumerate {1,2}-sequences in level order", "[geometry]") {
    const fractal_graph g0 = make_fractal_graph(0);
    CHECK(g0.nodes.size() == 1);
    CHECK(g0.edges.empty());

    const fractal_graph g1 = make_fractal_graph(1);
    REQUIRE(g1.nodes.size() == 3);
    CHECK(g1.edges.size() == 2);
    CHECK(g1.nodes[1].seq == finite_seq{1});
    CHECK(g1.nodes[2].seq == finite_seq{2});

    const fractal_graph g = make_fractal_graph(3);
    REQUIRE(g.nodes.size() == 15);
    REQUIRE(g.edges.size() == 14);
    for (std::size_t i = 0; i < 7; ++i) {
        finite_seq left = g.nodes[i].seq;
        left.push_back(1);
        CHECK(g.nodes[2 * i + 1].seq == left);
        left.back() = 2;
        CHECK(g.nodes[2 * i + 2].seq == left);
    }
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        CHECK(g.edges[j].first == j / 2);
        CHECK(g.edges[j].second == j + 1);
    }
    // points match a from-scratch inversion of both closures
    for (const auto& node : g.nodes) {
        CHECK(node.pt.x == invert({node.seq, {2}}));
        CHECK(node.pt.y == invert({node.seq, {1}}));
    }
}

TEST_CASE("distinct sequences land on distinct points", "[geometry]") {
    const fractal_graph g = make_fractal_graph(3);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < g.nodes.size(); ++j) {
            CHECK_FALSE(g.nodes[i].pt == g.nodes[j].pt);
        }
    }
}

TEST_CASE("the depth limit guards construction", "[geometry]") {
    CHECK_THROWS_AS(make_fractal_graph(21), std::length_error);
    CHECK_THROWS_AS(make_fractal_graph(3, 2), std::length_error);
    CHECK_NOTHROW(make_fractal_graph(2, 2));
}

TEST_CASE("the anchored line recovers the pure-cycle value", "[geometry]") {
    CHECK(periodic_value_via_line({2}) == odd_rational(1));
    CHECK(periodic_value_via_line({1}) == odd_rational(-1));
    CHECK(periodic_value_via_line({1, 2}) == odd_rational(-5));
    CHECK(periodic_value_via_line({1, 2, 2}) == odd_rational(rational(23, 5)));
    CHECK_THROWS_AS(periodic_value_via_line({}), std::domain_error);
    CHECK_THROWS_AS(periodic_value_via_line({1, 4}), std::domain_error);

    // agrees with the closed form everywhere up to length 5; the two routes
    // share no code
    const fractal_graph g = make_fractal_graph(5);
    for (std::size_t i = 1; i < g.nodes.size(); ++i) {
        CHECK(periodic_value_via_line(g.nodes[i].seq) == invert_cycle(g.nodes[i].seq));
    }
}

TEST_CASE("every point sits left of x=1, below y=-1, under the diagonal", "[geometry]") {
    const fractal_graph g = make_fractal_graph(8);
    for (const auto& node : g.nodes) {
        CHECK(node.pt.x.value() <= rational(1));
        CHECK(node.pt.y.value() <= rational(-1));
        CHECK(node.pt.y.value() < node.pt.x.value());
    }
}
