#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "collatz/odd_rational.hpp"
#include "collatz/rational.hpp"
#include "collatz/representation.hpp"
#include "collatz/sequence.hpp"

namespace collatz {

/// One absolutely periodic orbit. Members are listed in step order starting
/// from the element of smallest absolute value (positive first on ties);
/// stepping through them emits quotient_cycle and returns to the start.
struct loop_report {
    std::vector<odd_rational> members;
    finite_seq quotient_cycle;
    bool canonical = true;  // quotient_cycle has no shorter period
};

struct loop_scan_result {
    std::vector<loop_report> loops;
    std::vector<odd_rational> undecided;  // representation still open after max_steps
};

namespace detail {

/// Orbit anchor ordering: smaller absolute value first, positive before
/// negative on equal magnitude.
inline bool anchor_less(const odd_rational& a, const odd_rational& b) {
    const bigint la = boost::multiprecision::abs(a.num()) * b.den();
    const bigint lb = boost::multiprecision::abs(b.num()) * a.den();
    if (la != lb) return la < lb;
    return b < a;
}

inline loop_report orbit_report(const odd_rational& start) {
    std::vector<odd_rational> members;
    finite_seq quotients;
    odd_rational cur = start;
    do {
        collatz_move mv = collatz_step(cur);
        members.push_back(std::move(cur));
        quotients.push_back(mv.exponent);
        cur = std::move(mv.next);
    } while (!(cur == start));

    const auto anchor = std::min_element(members.begin(), members.end(), anchor_less);
    const auto offset = static_cast<std::size_t>(anchor - members.begin());
    std::rotate(members.begin(), members.begin() + offset, members.end());
    std::rotate(quotients.begin(), quotients.begin() + offset, quotients.end());
    const bool canonical = smallest_period(quotients) == quotients.size();
    return loop_report{std::move(members), std::move(quotients), canonical};
}

struct loop_chunk {
    std::vector<loop_report> found;  // deduplicated within the chunk
    std::vector<odd_rational> undecided;
};

/// Scans odd integers in [lo, hi] ascending.
inline loop_chunk scan_loop_chunk(const bigint& lo, const bigint& hi,
                                  std::uint32_t max_steps) {
    loop_chunk chunk;
    std::unordered_set<odd_rational> seen_anchors;
    for (bigint x = (lo % 2 == 0) ? lo + 1 : lo; x <= hi; x += 2) {
        const odd_rational a{rational(x)};
        const represent_result r = represent(a, max_steps);
        if (std::holds_alternative<truncation>(r)) {
            chunk.undecided.push_back(a);
            continue;
        }
        if (!std::get<eventually_periodic>(r).preperiod.empty()) continue;
        loop_report report = orbit_report(a);
        if (seen_anchors.insert(report.members.front()).second) {
            chunk.found.push_back(std::move(report));
        }
    }
    return chunk;
}

}  // namespace detail

/// Finds every absolutely periodic odd integer in [lo, hi]: those whose
/// representation is a pure cycle with no preperiod. One report per orbit,
/// ordered by the anchor member (smallest |value| first, positive before
/// negative); elements undecided within max_steps are returned separately,
/// ascending. Output does not depend on the thread count.
inline loop_scan_result find_absolute_loops(const bigint& lo, const bigint& hi,
                                            std::uint32_t max_steps,
                                            unsigned threads = 1) {
    loop_scan_result result;
    if (lo > hi) return result;

    std::vector<detail::loop_chunk> chunks;
    if (threads <= 1) {
        chunks.push_back(detail::scan_loop_chunk(lo, hi, max_steps));
    } else {
        const bigint span = hi - lo + 1;
        const bigint step = (span + threads - 1) / threads;
        std::vector<std::future<detail::loop_chunk>> futures;
        for (bigint start = lo; start <= hi; start += step) {
            bigint end = start + step - 1;
            if (end > hi) end = hi;
            futures.push_back(std::async(std::launch::async, detail::scan_loop_chunk,
                                         start, end, max_steps));
        }
        for (auto& f : futures) chunks.push_back(f.get());
    }

    std::unordered_set<odd_rational> seen_anchors;
    for (auto& chunk : chunks) {
        for (auto& report : chunk.found) {
            if (seen_anchors.insert(report.members.front()).second) {
                result.loops.push_back(std::move(report));
            }
        }
        result.undecided.insert(result.undecided.end(),
                                std::make_move_iterator(chunk.undecided.begin()),
                                std::make_move_iterator(chunk.undecided.end()));
    }
    std::sort(result.loops.begin(), result.loops.end(),
              [](const loop_report& a, const loop_report& b) {
                  return detail::anchor_less(a.members.front(), b.members.front());
              });
    return result;
}

}  // namespace collatz
