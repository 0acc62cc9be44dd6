#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "collatz/odd_rational.hpp"
#include "collatz/rational.hpp"
#include "collatz/sequence.hpp"

namespace collatz {

/// One completed refinement round: a run of 2's, then a run of 1's closed by
/// a single 2, and the (strictly smaller) error that remains.
struct round_record {
    unsigned twos_appended = 0;
    unsigned ones_appended = 0;
    rational error_after;

    friend bool operator==(const round_record&, const round_record&) = default;
};

struct approx_result {
    finite_seq sequence;      // items in {1,2}
    odd_rational value;       // invert([sequence,(1)]), always >= target
    rational error;           // value - target, < requested epsilon
    rational start_error;     // error right after the opening run of 2's
    std::vector<round_record> trace;
};

namespace detail {

/// Greedy digit builder. Maintains the affine map t |-> alpha*t + beta that
/// sends the value of a tail sequence to the value of [seq, tail]; appending
/// digit k composes with t |-> (2^k*t - 1)/3, so every scan step costs O(1)
/// big-integer operations instead of a fresh inversion.
class approx_engine {
  public:
    explicit approx_engine(rational target) : target_(std::move(target)) {}

    const finite_seq& seq() const { return seq_; }

    /// Value with the all-ones tail: alpha*(-1) + beta. Appending a 1 leaves
    /// it unchanged, so only 2's move it.
    rational value() const { return beta_ - alpha_; }

    /// Distance above the target; nonnegative after scan_twos.
    rational gap() const { return value() - target_; }

    /// Appends 2's while the value stays at or above the target. Afterwards
    /// one more 2 would overshoot: value() >= target > value-with-extra-2.
    unsigned scan_twos() {
        unsigned count = 0;
        // value after appending one 2 = (beta - alpha/3) - 4*alpha/3
        while (beta_ - rational(5) * alpha_ / rational(3) >= target_) {
            append(2);
            ++count;
        }
        return count;
    }

    /// Appends 1's until closing with a 2 no longer overshoots, then appends
    /// that 2. Each 1 shrinks the overshoot by 2/3 while keeping the value
    /// fixed, so the loop always terminates past the gap; it also always runs
    /// at least once because scan_twos stopped on a strict overshoot.
    unsigned scan_ones_and_close() {
        const rational w = gap();
        unsigned count = 0;
        // drop in value caused by closing with a 2 = (2/3)*alpha
        while (rational(2) * alpha_ / rational(3) >= w) {
            append(1);
            ++count;
        }
        append(2);
        return count;
    }

  private:
    void append(unsigned digit) {
        seq_.push_back(digit);
        const rational third = alpha_ / rational(3);
        alpha_ = third * rational(digit == 1 ? 2 : 4);
        beta_ -= third;
    }

    rational target_;
    finite_seq seq_;
    rational alpha_{1};
    rational beta_{0};
};

inline void require_approx_target(const rational& z) {
    if (z > rational(-1)) {
        throw std::domain_error("approximation target must be at most -1");
    }
}

}  // namespace detail

/// Builds A over {1,2} with 0 <= invert([A,(1)]) - z < eps, approaching z
/// from above. Rounds alternate a descending run of 2's with a run of 1's
/// closed by a 2; each completed round cuts the error to less than a third,
/// and an exact hit stops immediately with error 0.
inline approx_result approximate(const rational& z, const rational& eps) {
    detail::require_approx_target(z);
    if (eps <= rational(0)) throw std::domain_error("epsilon must be positive");

    detail::approx_engine eng(z);
    unsigned twos = eng.scan_twos();
    const rational start_error = eng.gap();
    std::vector<round_record> trace;
    while (eng.gap() >= eps) {
        const unsigned ones = eng.scan_ones_and_close();
        trace.push_back({twos, ones, eng.gap()});
        twos = eng.scan_twos();
    }
    return approx_result{eng.seq(), odd_rational(eng.value()), eng.gap(), start_error,
                         std::move(trace)};
}

/// First `count` digits of the infinite {1,2}-word whose partial inversions
/// converge to z: the digit stream the rounds of `approximate` would emit if
/// run forever. An exact hit continues with 1's, which leave the value fixed.
inline finite_seq digits_of(const rational& z, std::size_t count) {
    detail::require_approx_target(z);
    if (count == 0) throw std::domain_error("digit count must be at least 1");

    detail::approx_engine eng(z);
    eng.scan_twos();
    while (eng.seq().size() < count && !eng.gap().is_zero()) {
        eng.scan_ones_and_close();
        eng.scan_twos();
    }
    finite_seq digits = eng.seq();
    digits.resize(count, 1);
    return digits;
}

}  // namespace collatz
