#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "collatz/inversion.hpp"
#include "collatz/odd_rational.hpp"
#include "collatz/sequence.hpp"

namespace collatz {

/// Plane point attached to a {1,2}-sequence A: x is the value whose
/// representation is [A,(2)], y the one for [A,(1)].
struct point {
    odd_rational x;
    odd_rational y;

    friend bool operator==(const point& a, const point& b) {
        return a.x == b.x && a.y == b.y;
    }
};

namespace detail {

inline void require_onetwo(const finite_seq& a) {
    for (unsigned q : a) {
        if (q != 1 && q != 2) {
            throw std::domain_error("sequence items must be 1 or 2");
        }
    }
}

}  // namespace detail

inline point point_of(const finite_seq& a) {
    detail::require_onetwo(a);
    return point{invert({a, {2}}), invert({a, {1}})};
}

struct fractal_node {
    finite_seq seq;
    point pt;
};

// All points for A in {1,2}^{<= depth} plus the parent-child segments
// A -- A.1 and A -- A.2. Nodes are ordered by length then lexicographically
// (1 before 2); edges are ordered by child index. Node identity is the
// sequence: distinct nodes may share one coordinate.
struct fractal_graph {
    unsigned depth = 0;
    std::vector<fractal_node> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline constexpr unsigned default_fractal_depth_limit = 20;

inline fractal_graph make_fractal_graph(unsigned depth,
                                        unsigned depth_limit = default_fractal_depth_limit) {
    if (depth > depth_limit) {
        throw std::length_error("fractal depth exceeds configured limit");
    }
    fractal_graph g;
    g.depth = depth;
    g.nodes.reserve((std::size_t{2} << depth) - 1);
    g.nodes.push_back({{}, point_of({})});

    std::size_t level_begin = 0;  // first index of the previous level
    for (unsigned level = 1; level <= depth; ++level) {
        const std::size_t level_end = g.nodes.size();
        for (std::size_t parent = level_begin; parent < level_end; ++parent) {
            for (unsigned digit : {1u, 2u}) {
                finite_seq child = g.nodes[parent].seq;
                child.push_back(digit);
                point pt = point_of(child);
                g.edges.emplace_back(parent, g.nodes.size());
                g.nodes.push_back({std::move(child), std::move(pt)});
            }
        }
        level_begin = level_end;
    }
    return g;
}

// Value of the pure cycle (A), recovered geometrically: the line through
// (1,-1) and P(A) meets y = x at x = (x1+y1) / (2 + y1 - x1). The vertical
// line case (A all 2's, x1 = 1) needs no special handling, and the
// denominator vanishes only for empty A, where P(A) = (1,-1) itself.
inline odd_rational periodic_value_via_line(const finite_seq& a) {
    if (a.empty()) {
        throw std::domain_error("periodic_value_via_line: sequence must be nonempty");
    }
    const point p = point_of(a);
    const rational& x1 = p.x.value();
    const rational& y1 = p.y.value();
    return odd_rational((x1 + y1) / (rational(2) + y1 - x1));
}

}  // namespace collatz
