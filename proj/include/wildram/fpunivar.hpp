#pragma once

#include <cstdint>
#include <vector>

#include "wildram/errors.hpp"
#include "wildram/fp.hpp"
#include "wildram/perfpoly.hpp"

namespace wildram {

/// Dense univariate polynomials over F_p, coefficient of degree i at index i.
/// Used for zero-locus bookkeeping: gcds, radicals and root counts of the
/// integer shadows of perfection elements.
namespace univar {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }  // -1 for zero
inline bool is_zero(const Poly& a) { return a.empty(); }

inline Poly make_monic(Poly a, std::uint32_t p) {
    trim(a);
    if (a.empty()) return a;
    FpElem inv = FpElem(a.back(), p).inv();
    for (auto& c : a) c = (FpElem(c, p) * inv).value();
    return a;
}

inline Poly rem(Poly a, const Poly& b, std::uint32_t p) {
    check_internal(!b.empty(), "univar::rem by zero");
    FpElem lead_inv = FpElem(b.back(), p).inv();
    while (static_cast<int>(a.size()) >= static_cast<int>(b.size())) {
        trim(a);
        if (static_cast<int>(a.size()) < static_cast<int>(b.size())) break;
        FpElem q = FpElem(a.back(), p) * lead_inv;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            FpElem updated = FpElem(a[i + shift], p) - q * FpElem(b[i], p);
            a[i + shift] = updated.value();
        }
        trim(a);
    }
    return a;
}

inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

inline Poly derivative(const Poly& a, std::uint32_t p) {
    Poly d;
    for (std::size_t i = 1; i < a.size(); ++i)
        d.push_back(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[i]) * (i % p) % p));
    trim(d);
    return d;
}

inline Poly quotient_exact(const Poly& a, const Poly& b, std::uint32_t p) {
    // exact division, asserts remainder 0
    Poly r = a, q;
    trim(r);
    check_internal(!b.empty(), "univar: exact division by zero");
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    FpElem lead_inv = FpElem(b.back(), p).inv();
    while (static_cast<int>(r.size()) >= static_cast<int>(b.size()) && !r.empty()) {
        FpElem c = FpElem(r.back(), p) * lead_inv;
        std::size_t shift = r.size() - b.size();
        q[shift] = c.value();
        for (std::size_t i = 0; i < b.size(); ++i)
            r[i + shift] = (FpElem(r[i + shift], p) - c * FpElem(b[i], p)).value();
        trim(r);
    }
    check_internal(r.empty(), "univar: division not exact");
    trim(q);
    return q;
}

/// Radical (product of the distinct irreducible factors), correct in
/// characteristic p: when the derivative vanishes the polynomial is
/// g(c^p) = g(c)^p over F_p and we recurse on g.
inline Poly radical(Poly a, std::uint32_t p) {
    trim(a);
    if (deg(a) <= 0) return Poly{1};
    Poly d = derivative(a, p);
    if (is_zero(d)) {
        Poly g;
        for (std::size_t i = 0; i < a.size(); i += p) g.push_back(a[i]);
        for (std::size_t i = 0; i < a.size(); ++i)
            check_internal(i % p == 0 || a[i] == 0, "univar::radical: inconsistent p-power");
        return radical(g, p);
    }
    Poly g = gcd(a, d, p);
    Poly s = quotient_exact(a, g, p);  // the factors of multiplicity prime to p, each once
    s = make_monic(s, p);
    // strip every s-factor from a, what remains has multiplicities divisible by p
    Poly m = make_monic(a, p);
    for (;;) {
        Poly h = gcd(m, s, p);
        if (deg(h) <= 0) break;
        m = quotient_exact(m, h, p);
    }
    Poly rad_rest = radical(m, p);
    // s and rad_rest are coprime by construction
    Poly prod(static_cast<std::size_t>(deg(s) + deg(rad_rest) + 1), 0);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < rad_rest.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(s[i]) * rad_rest[j]) % p);
    trim(prod);
    return make_monic(prod, p);
}

/// Number of distinct roots in an algebraic closure.
inline int distinct_root_count(const Poly& a, std::uint32_t p) {
    Poly r = radical(a, p);
    return deg(r) <= 0 ? 0 : deg(r);
}

}  // namespace univar

/// Integer shadow of a univariate perfection element: q^(p^m) with m the
/// maximal p-depth, as a dense F_p[var] polynomial. Same zero locus as q.
inline univar::Poly univariate_shadow(const PerfPoly& q, const std::string& var) {
    PerfPoly s = q.frobenius(q.max_pdepth());
    univar::Poly out;
    for (const auto& [m, c] : s.terms()) {
        std::int64_t e = 0;
        for (const auto& [v, ex] : m) {
            require(v == var, "univariate_shadow: unexpected variable " + v);
            check_internal(ex.is_integer() && ex.num >= 0, "univariate_shadow: bad exponent");
            e = ex.num;
        }
        if (out.size() <= static_cast<std::size_t>(e)) out.resize(e + 1, 0);
        out[e] = c;
    }
    univar::trim(out);
    return out;
}

inline PerfPoly univar_to_perfpoly(const univar::Poly& a, std::uint32_t p, const std::string& var) {
    PerfPoly out = PerfPoly::zero(p);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        Monomial m;
        if (i > 0) m.push_back({var, PerfExp{static_cast<std::int64_t>(i), 0}});
        out.add_term(m, a[i]);
    }
    return out;
}

}  // namespace wildram
