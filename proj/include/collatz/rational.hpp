#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace collatz {

using bigint = boost::multiprecision::cpp_int;

/// Largest v with 2^v dividing n. Throws std::domain_error for n = 0.
inline unsigned two_adic_valuation(const bigint& n) {
    if (n == 0) {
        throw std::domain_error("two_adic_valuation: argument must be nonzero");
    }
    return boost::multiprecision::lsb(boost::multiprecision::abs(n));
}

// Exact rational number. Canonical form throughout: denominator > 0,
// gcd(|num|, den) = 1, sign carried by the numerator.
class rational {
public:
    rational() : num_(0), den_(1) {}
    rational(int n) : num_(n), den_(1) {}            // NOLINT: implicit by design
    rational(bigint n) : num_(std::move(n)), den_(1) {}
    rational(bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) {
            throw std::domain_error("rational: zero denominator");
        }
        normalize();
    }

    const bigint& num() const { return num_; }
    const bigint& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    friend rational operator-(const rational& a) {
        rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    friend rational operator+(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator-(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator*(const rational& a, const rational& b) {
        return rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.num_ == 0) {
            throw std::domain_error("rational: division by zero");
        }
        return rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    // Canonical form makes structural equality exact equality.
    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
        // Denominators are positive, so cross-multiplication preserves order.
        const bigint lhs = a.num_ * b.den_;
        const bigint rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Minimal text form: "p" when the value is an integer, else "p/q".
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Always-"p/q" text form, used by the file emitters.
    std::string str_ratio() const { return num_.str() + '/' + den_.str(); }

    std::string decimal(unsigned significant_digits) const;

    /// Parses `-?digits`, `-?digits/digits` or `-?digits.digits` (decimal
    /// literals are converted exactly). Throws std::invalid_argument with the
    /// offending token on any other input.
    static rational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const rational& r) {
        return os << r.str();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        bigint g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) {
            den_ = 1;
        }
    }

    bigint num_;
    bigint den_;
};

namespace detail {

inline bigint pow10(unsigned k) {
    bigint r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

// round(a / b) to nearest, half away from zero; a >= 0, b > 0.
inline bigint div_round_nearest(const bigint& a, const bigint& b) {
    bigint q = a / b;
    bigint r = a % b;
    if (2 * r >= b) ++q;
    return q;
}

}  // namespace detail

// Round-to-nearest decimal rendering at `significant_digits` significant
// digits, computed entirely in integer arithmetic so output is deterministic.
// Trailing fractional zeros are stripped; plain (non-scientific) notation.
inline std::string rational::decimal(unsigned significant_digits) const {
    if (significant_digits == 0) {
        throw std::domain_error("decimal: precision must be positive");
    }
    if (num_ == 0) return "0";

    const bigint N = boost::multiprecision::abs(num_);
    const bigint& D = den_;

    // e = floor(log10(N/D)): estimate from digit counts, then fix up exactly.
    long e = static_cast<long>(N.str().size()) - static_cast<long>(D.str().size());
    auto less_than_pow10 = [&](long k) {
        // N/D < 10^k ?
        return k >= 0 ? N < D * detail::pow10(static_cast<unsigned>(k))
                      : N * detail::pow10(static_cast<unsigned>(-k)) < D;
    };
    while (less_than_pow10(e)) --e;
    while (!less_than_pow10(e + 1)) ++e;

    const unsigned p = significant_digits;
    const long shift = static_cast<long>(p) - 1 - e;
    bigint mantissa = shift >= 0
        ? detail::div_round_nearest(N * detail::pow10(static_cast<unsigned>(shift)), D)
        : detail::div_round_nearest(N, D * detail::pow10(static_cast<unsigned>(-shift)));
    if (mantissa == detail::pow10(p)) {  // rounding carried into one more digit
        mantissa = detail::pow10(p - 1);
        ++e;
    }

    std::string digits = mantissa.str();
    std::string out;
    if (e >= static_cast<long>(p) - 1) {
        out = digits + std::string(static_cast<std::size_t>(e - p + 1), '0');
    } else if (e >= 0) {
        out = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." +
              digits.substr(static_cast<std::size_t>(e + 1));
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return (num_ < 0 ? "-" : "") + out;
}

inline rational rational::parse(std::string_view text) {
    const auto fail = [&]() -> rational {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    };
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    auto take_digits = [&](std::string_view& v) -> std::string {
        std::size_t i = 0;
        while (i < v.size() && v[i] >= '0' && v[i] <= '9') ++i;
        std::string d(v.substr(0, i));
        v.remove_prefix(i);
        return d;
    };
    // strip leading zeros: bigint's string constructor would read them as octal
    auto to_big = [](const std::string& d) {
        const std::size_t nz = d.find_first_not_of('0');
        return nz == std::string::npos ? bigint(0) : bigint(d.substr(nz));
    };
    std::string intpart = take_digits(s);
    if (intpart.empty()) return fail();

    bigint num;
    bigint den = 1;
    if (s.empty()) {
        num = to_big(intpart);
    } else if (s.front() == '/') {
        s.remove_prefix(1);
        std::string d = take_digits(s);
        if (d.empty() || !s.empty()) return fail();
        num = to_big(intpart);
        den = to_big(d);
        if (den == 0) {
            throw std::domain_error("rational: zero denominator in '" + std::string(text) + "'");
        }
    } else if (s.front() == '.') {
        s.remove_prefix(1);
        std::string frac = take_digits(s);
        if (frac.empty() || !s.empty()) return fail();
        num = to_big(intpart + frac);
        den = detail::pow10(static_cast<unsigned>(frac.size()));
    } else {
        return fail();
    }
    if (negative) num = -num;
    return rational(std::move(num), std::move(den));
}

}  // namespace collatz

template <>
struct std::hash<collatz::rational> {
    std::size_t operator()(const collatz::rational& r) const noexcept {
        std::size_t h = std::hash<collatz::bigint>{}(r.num());
        std::size_t k = std::hash<collatz::bigint>{}(r.den());
        return h ^ (k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};
