#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace slnweb {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
    return r;
}

} // namespace detail

/**
 * Laurent polynomial in q with signed 64-bit coefficients.
 *
 * Zero coefficients are never stored, so two equal polynomials have equal
 * term maps.  All arithmetic is overflow checked.
 */
class LaurentPoly {
public:
    using Exponent = std::int64_t;
    using Coefficient = std::int64_t;
    using Terms = std::map<Exponent, Coefficient>;

    LaurentPoly() = default;
    LaurentPoly(Coefficient c) { add_term(0, c); }

    static LaurentPoly monomial(Exponent e, Coefficient c = 1) {
        LaurentPoly p;
        p.add_term(e, c);
        return p;
    }

    static LaurentPoly q(Exponent e = 1) { return monomial(e, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Coefficient coeff(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    // Only meaningful for nonzero polynomials.
    Exponent min_exponent() const { return terms_.begin()->first; }
    Exponent max_exponent() const { return terms_.rbegin()->first; }

    void add_term(Exponent e, Coefficient c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = detail::checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto [e, c] : o.terms_) add_term(e, detail::checked_mul(c, -1));
        return *this;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) { return a.scaled(-1, 0); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto [ea, ca] : a.terms_)
            for (auto [eb, cb] : b.terms_)
                r.add_term(detail::checked_add(ea, eb), detail::checked_mul(ca, cb));
        return r;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // sign * q^shift * p
    LaurentPoly scaled(int sign, Exponent shift) const {
        LaurentPoly r;
        for (auto [e, c] : terms_)
            r.terms_.emplace(detail::checked_add(e, shift), sign < 0 ? detail::checked_mul(c, -1) : c);
        return r;
    }

    // q -> q^{-1}
    LaurentPoly bar() const {
        LaurentPoly r;
        for (auto [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    // q -> -q
    LaurentPoly negate_q() const {
        LaurentPoly r;
        for (auto [e, c] : terms_) r.terms_.emplace(e, (e % 2 != 0) ? detail::checked_mul(c, -1) : c);
        return r;
    }

    bool has_nonnegative_coefficients() const {
        for (auto [e, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    // Quotient by a nonzero divisor; throws if the division is inexact.
    LaurentPoly exact_div(const LaurentPoly& d) const;

    std::string render() const;
    static LaurentPoly parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.render(); }

private:
    Terms terms_;
};

inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline LaurentPoly scale(const LaurentPoly& p, int sign, std::int64_t shift) { return p.scaled(sign, shift); }
inline LaurentPoly bar(const LaurentPoly& p) { return p.bar(); }

inline LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
    if (d.is_zero()) throw Error("division by the zero polynomial");
    LaurentPoly rem = *this;
    LaurentPoly quot;
    if (rem.is_zero()) return quot;
    const Exponent dlead = d.max_exponent();
    const Coefficient dc = d.coeff(dlead);
    const Exponent lowest = min_exponent() - d.min_exponent();
    while (!rem.is_zero()) {
        const Exponent e = rem.max_exponent() - dlead;
        const Coefficient c = rem.coeff(rem.max_exponent());
        if (e < lowest || c % dc != 0) throw Error("inexact polynomial division");
        LaurentPoly t = monomial(e, c / dc);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

inline std::string LaurentPoly::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (e == 0) {
            out += std::to_string(mag);
            continue;
        }
        if (mag != 1) out += std::to_string(mag) + "*";
        out += "q";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

namespace detail {

class LaurentParser {
public:
    explicit LaurentParser(std::string_view s) : s_(s) {}

    LaurentPoly run() {
        LaurentPoly p;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++i_;
            skip_ws();
        } else if (peek() == '+') {
            ++i_;
            skip_ws();
        }
        term(p, sign);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++i_;
            skip_ws();
            term(p, op == '-' ? -1 : 1);
        }
        return p;
    }

private:
    bool at_end() const { return i_ >= s_.size(); }
    char peek() const { return s_[i_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(1, i_ + 1, msg); }

    std::int64_t number() {
        std::size_t start = i_;
        std::int64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = checked_add(checked_mul(v, 10), peek() - '0');
            ++i_;
        }
        if (i_ == start) fail("expected a number");
        return v;
    }

    void term(LaurentPoly& p, int sign) {
        if (at_end()) fail("expected a term");
        std::int64_t coef = 1;
        bool has_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = number();
            has_coef = true;
            skip_ws();
            if (at_end() || peek() != '*') {
                p.add_term(0, sign * coef);
                return;
            }
            ++i_;
            skip_ws();
        }
        if (at_end() || peek() != 'q') fail(has_coef ? "expected 'q' after '*'" : "expected a term");
        ++i_;
        std::int64_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++i_;
            skip_ws();
            bool braced = !at_end() && peek() == '{';
            if (braced) ++i_;
            int esign = 1;
            if (!at_end() && peek() == '-') {
                esign = -1;
                ++i_;
            }
            e = esign * number();
            if (braced) {
                if (at_end() || peek() != '}') fail("expected '}'");
                ++i_;
            }
        }
        p.add_term(e, sign * coef);
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

} // namespace detail

inline LaurentPoly LaurentPoly::parse(std::string_view text) { return detail::LaurentParser(text).run(); }

// [a] = q^{a-1} + q^{a-3} + ... + q^{1-a}; [0] = 0 and [-a] = -[a].
inline LaurentPoly qint(std::int64_t a) {
    if (a < 0) return -qint(-a);
    LaurentPoly p;
    for (std::int64_t e = a - 1; e >= 1 - a; e -= 2) p.add_term(e, 1);
    return p;
}

inline LaurentPoly qfact(std::int64_t a) {
    if (a < 0) throw Error("qfact of a negative integer");
    LaurentPoly p(1);
    for (std::int64_t k = 2; k <= a; ++k) p *= qint(k);
    return p;
}

inline LaurentPoly qbin(std::int64_t a, std::int64_t b) {
    if (b < 0) return {};
    if (a >= 0 && b > a) return {};
    if (a < 0) {
        // [a choose b] for negative a via the falling product [a][a-1]...[a-b+1] / [b]!
        LaurentPoly num(1);
        for (std::int64_t k = 0; k < b; ++k) num *= qint(a - k);
        return num.exact_div(qfact(b));
    }
    return qfact(a).exact_div(qfact(a - b) * qfact(b));
}

} // namespace slnweb
