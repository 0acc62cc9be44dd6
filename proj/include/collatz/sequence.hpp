#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace collatz {

// Partial quotients are positive integers; 0 is rejected at every parse and
// construction boundary. The cap keeps hostile inputs from requesting 2^q
// with astronomical q in the inversion formulas.
using finite_seq = std::vector<unsigned>;

inline constexpr unsigned max_partial_quotient = 1u << 20;

inline void validate_quotients(const finite_seq& s) {
    for (unsigned q : s) {
        if (q == 0) throw std::domain_error("partial quotient must be >= 1");
        if (q > max_partial_quotient) {
            throw std::domain_error("partial quotient exceeds supported bound");
        }
    }
}

// An eventually periodic quotient sequence [a_1,...,a_m,(b_1,...,b_n)]:
// finite preperiod followed by a repeating, nonempty cycle.
struct eventually_periodic {
    finite_seq preperiod;
    finite_seq cycle;

    friend bool operator==(const eventually_periodic&, const eventually_periodic&) = default;
};

/// Term i (0-based) of the infinite expansion.
inline unsigned expansion_at(const eventually_periodic& s, std::size_t i) {
    if (i < s.preperiod.size()) return s.preperiod[i];
    return s.cycle[(i - s.preperiod.size()) % s.cycle.size()];
}

namespace detail {

// Smallest p with word == its own p-periodic extension, via the KMP failure
// function; the word is primitive iff p == word.size().
inline std::size_t smallest_period(const finite_seq& word) {
    const std::size_t n = word.size();
    std::vector<std::size_t> fail(n + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (k > 0 && word[i] != word[k]) k = fail[k];
        if (word[i] == word[k]) ++k;
        fail[i + 1] = k;
    }
    const std::size_t p = n - fail[n];
    return (p != 0 && n % p == 0) ? p : n;
}

}  // namespace detail

// Unique presentation of the same infinite expansion: primitive cycle and
// minimal preperiod (empty, or its last item differs from the cycle's last).
inline eventually_periodic canonicalize(const eventually_periodic& s) {
    if (s.cycle.empty()) {
        throw std::domain_error("canonicalize: cycle must be nonempty");
    }
    eventually_periodic r = s;
    r.cycle.resize(detail::smallest_period(r.cycle));
    while (!r.preperiod.empty() && r.preperiod.back() == r.cycle.back()) {
        r.preperiod.pop_back();
        // rotate the cycle right by one; the expansion is unchanged
        r.cycle.insert(r.cycle.begin(), r.cycle.back());
        r.cycle.pop_back();
    }
    return r;
}

/// True iff the two presentations denote the same infinite expansion.
inline bool seq_equal(const eventually_periodic& a, const eventually_periodic& b) {
    return canonicalize(a) == canonicalize(b);
}

inline std::string to_string(const finite_seq& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(s[i]);
    }
    out += ']';
    return out;
}

inline std::string to_string(const eventually_periodic& s) {
    std::string out = "[";
    for (unsigned q : s.preperiod) {
        out += std::to_string(q);
        out += ',';
    }
    out += '(';
    for (std::size_t i = 0; i < s.cycle.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(s.cycle[i]);
    }
    out += ")]";
    return out;
}

namespace detail {

class seq_scanner {
public:
    explicit seq_scanner(std::string_view text) : text_(text), pos_(0) {}

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    unsigned quotient() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ == start) fail("expected a partial quotient");
        unsigned long long v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            v = v * 10 + static_cast<unsigned>(text_[i] - '0');
            if (v > max_partial_quotient) fail("partial quotient exceeds supported bound");
        }
        if (v == 0) fail("partial quotient must be >= 1");
        return static_cast<unsigned>(v);
    }
    void expect_end() {
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters");
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("bad sequence '" + std::string(text_) + "' at offset " +
                                    std::to_string(pos_) + ": " + what);
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_;
};

}  // namespace detail

/// Parses `[q1,q2,...]` (possibly `[]`); whitespace is ignored.
inline finite_seq parse_finite_seq(std::string_view text) {
    detail::seq_scanner sc(text);
    finite_seq items;
    sc.expect('[');
    if (!sc.consume(']')) {
        items.push_back(sc.quotient());
        while (sc.consume(',')) items.push_back(sc.quotient());
        sc.expect(']');
    }
    sc.expect_end();
    return items;
}

/// Parses `[q1,...,qm,(p1,...,pn)]`: optional preperiod items, then a
/// nonempty parenthesized cycle. Whitespace is ignored.
inline eventually_periodic parse_sequence(std::string_view text) {
    detail::seq_scanner sc(text);
    eventually_periodic s;
    sc.expect('[');
    while (sc.peek() != '(') {
        s.preperiod.push_back(sc.quotient());
        sc.expect(',');
    }
    sc.expect('(');
    s.cycle.push_back(sc.quotient());
    while (sc.consume(',')) s.cycle.push_back(sc.quotient());
    sc.expect(')');
    sc.expect(']');
    sc.expect_end();
    return s;
}

}  // namespace collatz
