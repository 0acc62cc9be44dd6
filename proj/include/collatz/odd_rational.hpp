#pragma once

#include <cassert>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "collatz/rational.hpp"

namespace collatz {

class odd_rational;
struct collatz_move;
collatz_move collatz_step(const odd_rational& a);
odd_rational inverse_step(const odd_rational& b, unsigned q);

// Element of Q^odd: a reduced fraction whose numerator and denominator are
// both odd (denominator positive, sign on the numerator). The forward and
// inverse Collatz steps are closed on this set.
class odd_rational {
public:
    explicit odd_rational(rational v) : v_(std::move(v)) {
        if (v_.num() % 2 == 0) {
            throw std::domain_error("not in Q^odd (even or zero numerator): " + v_.str());
        }
        if (v_.den() % 2 == 0) {
            throw std::domain_error("not in Q^odd (even denominator): " + v_.str());
        }
    }
    odd_rational(int n) : odd_rational(rational(n)) {}  // NOLINT: implicit by design

    static odd_rational parse(std::string_view text) {
        return odd_rational(rational::parse(text));
    }

    const rational& value() const { return v_; }
    const bigint& num() const { return v_.num(); }
    const bigint& den() const { return v_.den(); }
    bool is_integer() const { return v_.is_integer(); }

    std::string str() const { return v_.str(); }

    friend bool operator==(const odd_rational& a, const odd_rational& b) {
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const odd_rational& a, const odd_rational& b) {
        return a.v_ <=> b.v_;
    }

    friend std::ostream& operator<<(std::ostream& os, const odd_rational& r) {
        return os << r.v_;
    }

private:
    struct trusted_tag {};
    odd_rational(rational v, trusted_tag) : v_(std::move(v)) {
        assert(v_.num() % 2 != 0 && v_.den() % 2 != 0);
    }

    friend collatz_move collatz_step(const odd_rational&);
    friend odd_rational inverse_step(const odd_rational&, unsigned);

    rational v_;
};

/// One forward step: the extracted 2-adic exponent and the next iterate.
struct collatz_move {
    unsigned exponent;   // the partial quotient, always >= 1
    odd_rational next;
};

// a = x/y  ->  3a+1 = (3x+y)/y, or (x+y/3)/(y/3) when 3 | y; either way the
// fraction is already reduced with odd denominator and even numerator, so
// stripping the 2-adic part lands back in Q^odd. No gcd is ever needed here.
inline collatz_move collatz_step(const odd_rational& a) {
    bigint num;
    bigint den;
    if (a.den() % 3 == 0) {
        den = a.den() / 3;
        num = a.num() + den;
    } else {
        den = a.den();
        num = 3 * a.num() + den;
    }
    const unsigned q = two_adic_valuation(num);
    num >>= q;  // exact: q = v2(num), so this is division by 2^q
    return collatz_move{q, odd_rational(rational(std::move(num), std::move(den)),
                                        odd_rational::trusted_tag{})};
}

// Exact left inverse of collatz_step for a given exponent q >= 1:
// a = (2^q * b - 1) / 3. Only a factor of 3 can cancel, and the result is
// always back in Q^odd.
inline odd_rational inverse_step(const odd_rational& b, unsigned q) {
    if (q == 0) {
        throw std::domain_error("inverse_step: exponent must be >= 1");
    }
    bigint num = (b.num() << q) - b.den();
    bigint den = 3 * b.den();
    if (num % 3 == 0) {
        num /= 3;
        den = b.den();
    }
    return odd_rational(rational(std::move(num), std::move(den)),
                        odd_rational::trusted_tag{});
}

}  // namespace collatz

template <>
struct std::hash<collatz::odd_rational> {
    std::size_t operator()(const collatz::odd_rational& r) const noexcept {
        return std::hash<collatz::rational>{}(r.value());
    }
};
