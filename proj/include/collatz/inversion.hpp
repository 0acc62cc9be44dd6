#pragma once

#include <cstddef>
#include <stdexcept>

#include "collatz/odd_rational.hpp"
#include "collatz/sequence.hpp"

namespace collatz {

// The unique a in Q^odd whose representation is the pure cycle (b_1,...,b_n):
//
//   a = (3^{n-1} + sum_{i=1}^{n-1} 3^{n-1-i} * 2^{b_1+...+b_i})
//       / (2^{b_1+...+b_n} - 3^n)
//
// The denominator is never zero (2^k = 3^n has no solution for n >= 1), and
// after the single final reduction both parts are odd.
inline odd_rational invert_cycle(const finite_seq& cycle) {
    if (cycle.empty()) {
        throw std::domain_error("invert_cycle: cycle must be nonempty");
    }
    validate_quotients(cycle);
    const std::size_t n = cycle.size();

    bigint pow3n = 1;  // 3^n
    for (std::size_t i = 0; i < n; ++i) pow3n *= 3;

    bigint p3 = pow3n / 3;  // 3^{n-1-i}, walked down as i advances
    bigint numerator = p3;
    bigint pow2 = 1;  // running 2^{b_1+...+b_i}
    for (std::size_t i = 1; i < n; ++i) {
        pow2 <<= cycle[i - 1];
        p3 /= 3;
        numerator += p3 * pow2;
    }
    bigint denominator = (pow2 << cycle[n - 1]) - pow3n;
    return odd_rational(rational(std::move(numerator), std::move(denominator)));
}

// C^{-1} of an eventually periodic sequence: closed form for the cycle, then
// one inverse step per preperiod quotient, right to left. Non-canonical
// presentations are accepted; equal expansions give equal results.
inline odd_rational invert(const eventually_periodic& s) {
    validate_quotients(s.preperiod);
    odd_rational a = invert_cycle(s.cycle);
    for (auto it = s.preperiod.rbegin(); it != s.preperiod.rend(); ++it) {
        a = inverse_step(a, *it);
    }
    return a;
}

/// Strong forward oracle: n collatz_steps from a must return to a while
/// emitting exactly `cycle`. Used by verification suites and tests.
inline bool verify_cycle(const finite_seq& cycle, const odd_rational& a) {
    odd_rational b = a;
    for (unsigned q : cycle) {
        collatz_move mv = collatz_step(b);
        if (mv.exponent != q) return false;
        b = mv.next;
    }
    return b == a;
}

}  // namespace collatz
