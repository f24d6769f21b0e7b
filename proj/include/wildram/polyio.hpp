#pragma once

#include <cctype>
#include <cstdint>
#include <string>

#include "wildram/errors.hpp"
#include "wildram/perfpoly.hpp"

namespace wildram {

/// Canonical text form, round-trips bit-exactly through parse_poly.
/// Terms in canonical order; factors like y^(1/2) or u^3; negative exponents
/// rendered as trailing /x^n factors.
inline std::string to_string(const PerfPoly& q) {
    if (q.is_zero()) return "0";
    const std::uint32_t p = q.p();
    std::string out;
    bool first_term = true;
    for (const auto& [m, c] : q.terms()) {
        if (!first_term) out += " + ";
        first_term = false;
        std::string num, den;
        for (const auto& [v, e] : m) {
            std::string* side = e.num > 0 ? &num : &den;
            PerfExp shown = e.num > 0 ? e : PerfExp{-e.num, e.pdepth};
            if (!side->empty()) *side += "*";
            *side += v;
            if (!(shown.num == 1 && shown.pdepth == 0)) *side += "^" + pe_to_string(shown, p);
        }
        std::string t;
        if (num.empty()) {
            t = std::to_string(c);
        } else if (c == 1) {
            t = num;
        } else {
            t = std::to_string(c) + "*" + num;
        }
        if (!den.empty()) {
            std::string::size_type pos = 0;
            t += "/";
            // each denominator factor becomes its own /v^e suffix
            while ((pos = den.find('*')) != std::string::npos) den.replace(pos, 1, "/");
            t += den;
        }
        out += t;
    }
    return out;
}

namespace detail {

class PolyParser {
public:
    PolyParser(std::uint32_t p, const std::string& text) : p_(p), s_(text) {}

    PerfPoly run() {
        PerfPoly r = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error("expression parse error at position " + std::to_string(pos_) + ": " + msg +
                          " in \"" + s_ + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    std::int64_t parse_integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1LL << 40)) fail("integer literal too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    std::string parse_ident() {
        skip_ws();
        std::string id;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\'')) {
            id += s_[pos_++];
        }
        if (id.empty()) fail("expected identifier");
        return id;
    }

    // exponent := integer | '(' integer '/' integer ')'
    PerfExp parse_exponent() {
        skip_ws();
        if (eat('(')) {
            std::int64_t num = parse_integer();
            PerfExp e{num, 0};
            if (eat('/')) {
                std::int64_t den = parse_integer();
                std::uint32_t depth = 0;
                while (den > 1 && den % p_ == 0) den /= p_, ++depth;
                if (den != 1) fail("exponent denominator must be a power of p=" + std::to_string(p_));
                e = pe_make(num, depth, p_);
            }
            if (!eat(')')) fail("expected ')' in exponent");
            return e;
        }
        return {parse_integer(), 0};
    }

    PerfPoly parse_primary() {
        skip_ws();
        if (eat('(')) {
            PerfPoly r = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return PerfPoly::constant(p_, parse_integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return PerfPoly::variable(p_, parse_ident());
        fail("expected number, variable or '('");
    }

    // Invert a single-term polynomial (exponents negate, coefficient inverts).
    PerfPoly invert(const PerfPoly& q) {
        if (q.term_count() != 1) fail("division is only defined by a single monomial");
        const auto& [m, c] = *q.terms().begin();
        Monomial inv;
        for (const auto& [v, e] : m) inv.push_back({v, PerfExp{-e.num, e.pdepth}});
        return PerfPoly::monomial(p_, FpElem(c, p_).inv().value(), inv);
    }

    PerfPoly apply_power(const PerfPoly& base, PerfExp e) {
        if (e.is_zero()) return PerfPoly::constant(p_, 1);
        if (base.term_count() == 1) {
            const auto& [m, c] = *base.terms().begin();
            Monomial r;
            for (const auto& [v, me] : m) {
                // me^e: only integer me supported here (parser never produces otherwise)
                PerfExp scaled = pe_make(me.num * e.num, me.pdepth + e.pdepth, p_);
                if (!scaled.is_zero()) r.push_back({v, scaled});
            }
            // c^(a/p^e) = c^a since the p-th root is the identity on F_p
            std::int64_t cc = c == 1 ? 1 : FpElem(c, p_).pow(e.num).value();
            return PerfPoly::monomial(p_, cc, r);
        }
        if (!e.is_integer()) fail("fractional power of a sum");
        if (e.num < 0) fail("negative power of a sum");
        return base.pow(static_cast<std::uint32_t>(e.num));
    }

    PerfPoly parse_factor() {
        PerfPoly base = parse_primary();
        if (eat('^')) return apply_power(base, parse_exponent());
        return base;
    }

    PerfPoly parse_term() {
        PerfPoly r = parse_factor();
        for (;;) {
            if (eat('*')) {
                r = r * parse_factor();
            } else if (eat('/')) {
                r = r * invert(parse_factor());
            } else {
                return r;
            }
        }
    }

    PerfPoly parse_expr() {
        skip_ws();
        bool neg = eat('-');
        PerfPoly r = parse_term();
        if (neg) r = -r;
        for (;;) {
            if (eat('+')) {
                r = r + parse_term();
            } else if (eat('-')) {
                r = r - parse_term();
            } else {
                return r;
            }
        }
    }

    std::uint32_t p_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse an integer-coefficient rational expression in named variables over
/// F_p. `^` takes integer or (a/p^e) exponents; `/` divides by a monomial;
/// no implicit multiplication.
inline PerfPoly parse_poly(std::uint32_t p, const std::string& text) {
    return detail::PolyParser(p, text).run();
}

}  // namespace wildram
