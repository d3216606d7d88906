#pragma once

#include <cctype>

#include "ratfunc.hpp"

namespace ribbon {

namespace detail {

// cursor over the RatFunc text grammar; every error carries the byte offset
class TextCursor {
public:
    explicit TextCursor(const std::string& s) : s_(s) {}

    std::size_t pos() const { return i_; }
    bool at_end() const { return i_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[i_]; }
    void advance() { ++i_; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    [[noreturn]] void syntax(const std::string& expected) const {
        fail(errc::parse_error, "expected " + expected, "offset " + std::to_string(i_));
    }

    void expect(char c, const char* what) {
        if (peek() != c) syntax(what);
        advance();
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

inline Int parse_digits(TextCursor& cur, const char* what) {
    if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.syntax(what);
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        digits.push_back(cur.peek());
        cur.advance();
    }
    return Int(digits);
}

// x with an optional caret exponent
inline int parse_exponent(TextCursor& cur) {
    cur.expect('x', "'x'");
    if (cur.peek() != '^') return 1;
    cur.advance();
    Int e = parse_digits(cur, "exponent digits");
    if (e > 10000) fail(errc::parse_error, "exponent too large", "offset " + std::to_string(cur.pos()));
    return static_cast<int>(e);
}

// term := rational ('*'? x-part)? | x-part
inline void parse_term(TextCursor& cur, const Rat& sign, std::vector<Rat>& acc) {
    Rat c(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        Int num = parse_digits(cur, "digits");
        Int den = 1;
        if (cur.peek() == '/') {
            cur.advance();
            std::size_t at = cur.pos();
            den = parse_digits(cur, "denominator digits");
            if (den == 0)
                fail(errc::division_by_zero, "zero denominator in rational literal",
                     "offset " + std::to_string(at));
        }
        c = Rat(num, den);
        have_coeff = true;
    }
    int k = 0;
    cur.skip_ws();
    if (cur.peek() == '*') {
        if (!have_coeff) cur.syntax("a term");
        cur.advance();
        cur.skip_ws();
        k = parse_exponent(cur);
    } else if (cur.peek() == 'x') {
        k = parse_exponent(cur);
    } else if (!have_coeff) {
        cur.syntax("a term");
    }
    if (static_cast<std::size_t>(k) >= acc.size()) acc.resize(static_cast<std::size_t>(k) + 1, Rat(0));
    acc[static_cast<std::size_t>(k)] += sign * c;
}

inline Poly parse_poly(TextCursor& cur) {
    std::vector<Rat> acc;
    cur.skip_ws();
    Rat sign(1);
    if (cur.peek() == '-') {
        sign = -1;
        cur.advance();
        cur.skip_ws();
    }
    for (;;) {
        parse_term(cur, sign, acc);
        cur.skip_ws();
        if (cur.peek() == '+')
            sign = 1;
        else if (cur.peek() == '-')
            sign = -1;
        else
            break;
        cur.advance();
        cur.skip_ws();
    }
    return Poly::from_coeffs(std::move(acc));
}

} // namespace detail

// ratfunc := poly | '(' poly ')' '/' '(' poly ')'
inline RatFunc parse_ratfunc(const std::string& text) {
    detail::TextCursor cur(text);
    cur.skip_ws();
    RatFunc out;
    if (cur.peek() == '(') {
        cur.advance();
        Poly num = detail::parse_poly(cur);
        cur.skip_ws();
        cur.expect(')', "')'");
        cur.skip_ws();
        cur.expect('/', "'/'");
        cur.skip_ws();
        cur.expect('(', "'('");
        Poly den = detail::parse_poly(cur);
        cur.skip_ws();
        cur.expect(')', "')'");
        if (den.is_zero())
            fail(errc::division_by_zero, "zero denominator", "offset " + std::to_string(cur.pos()));
        out = RatFunc(num, den);
    } else {
        out = RatFunc(detail::parse_poly(cur));
    }
    cur.skip_ws();
    if (!cur.at_end()) cur.syntax("end of input");
    return out;
}

inline Poly parse_poly_text(const std::string& text) {
    detail::TextCursor cur(text);
    Poly p = detail::parse_poly(cur);
    cur.skip_ws();
    if (!cur.at_end()) cur.syntax("end of input");
    return p;
}

} // namespace ribbon
