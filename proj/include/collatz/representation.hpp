#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <variant>

#include "collatz/odd_rational.hpp"
#include "collatz/sequence.hpp"

namespace collatz {

/// The run stopped without a value recurring: the quotients emitted so far
/// plus the final iterate, from which a caller can resume.
struct truncation {
    finite_seq prefix;
    odd_rational last_iterate;
    std::uint32_t steps_used;
};

using represent_result = std::variant<eventually_periodic, truncation>;

inline bool is_periodic(const represent_result& r) {
    return std::holds_alternative<eventually_periodic>(r);
}
inline const eventually_periodic& periodic_seq(const represent_result& r) {
    return std::get<eventually_periodic>(r);
}
inline const truncation& truncated(const represent_result& r) {
    return std::get<truncation>(r);
}

// Runs the forward map from a, recording every iterate (including a itself)
// in a hash table keyed on the exact reduced value. The first recurrence at
// step t of the value first seen at step f splits the emitted quotients into
// preperiod [0,f) and cycle [f,t); detecting on values rather than quotient
// tails finds the cycle at the earliest possible step, and by uniqueness of
// representations the split is already canonical. canonicalize is applied
// anyway as a safeguard.
inline represent_result represent(const odd_rational& a, std::uint32_t max_steps) {
    if (max_steps == 0) {
        throw std::domain_error("represent: max_steps must be >= 1");
    }
    std::unordered_map<odd_rational, std::uint32_t> first_seen;
    first_seen.emplace(a, 0);

    finite_seq quotients;
    odd_rational b = a;
    for (std::uint32_t step = 1; step <= max_steps; ++step) {
        collatz_move mv = collatz_step(b);
        b = mv.next;
        quotients.push_back(mv.exponent);
        auto it = first_seen.find(b);
        if (it != first_seen.end()) {
            const std::uint32_t f = it->second;
            eventually_periodic s;
            s.preperiod.assign(quotients.begin(), quotients.begin() + f);
            s.cycle.assign(quotients.begin() + f, quotients.end());
            return canonicalize(s);
        }
        first_seen.emplace(b, step);
    }
    return truncation{std::move(quotients), std::move(b), max_steps};
}

}  // namespace collatz
