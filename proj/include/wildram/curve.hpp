#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "wildram/errors.hpp"
#include "wildram/perfpoly.hpp"
#include "wildram/ramification.hpp"

namespace wildram {

/// One-variable ramification engine over k'((t)). Deliberately independent of
/// the two-variable chart machinery so eqcv-style comparisons are between
/// separate code paths. Coefficients are PerfPoly in declared parameter
/// names; zero tests treat parameters as transcendental.
namespace curve1 {

/// Truncated Laurent series in t: exponent -> coefficient, coefficients
/// exact for every exponent < trunc_order.
struct Series {
    std::uint32_t p;
    std::map<std::int64_t, PerfPoly> coeffs;
    std::int64_t trunc_order;

    void add(std::int64_t e, const PerfPoly& c) {
        if (e >= trunc_order || c.is_zero()) return;
        auto it = coeffs.find(e);
        if (it == coeffs.end()) {
            coeffs.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
};

inline Series series_zero(std::uint32_t p, std::int64_t trunc) { return Series{p, {}, trunc}; }

inline Series series_add(const Series& a, const Series& b) {
    Series r = series_zero(a.p, std::min(a.trunc_order, b.trunc_order));
    for (const auto& [e, c] : a.coeffs) r.add(e, c);
    for (const auto& [e, c] : b.coeffs) r.add(e, c);
    return r;
}

inline Series series_mul(const Series& a, const Series& b) {
    std::int64_t orda = a.coeffs.empty() ? a.trunc_order : a.coeffs.begin()->first;
    std::int64_t ordb = b.coeffs.empty() ? b.trunc_order : b.coeffs.begin()->first;
    Series r = series_zero(a.p, std::min(a.trunc_order + ordb, b.trunc_order + orda));
    for (const auto& [ea, ca] : a.coeffs)
        for (const auto& [eb, cb] : b.coeffs) r.add(ea + eb, ca * cb);
    return r;
}

/// Convert a polynomial in t (plus parameters) into a series.
inline Series series_from_poly(const PerfPoly& q, std::int64_t trunc) {
    Series r = series_zero(q.p(), trunc);
    for (const auto& [m, c] : q.terms()) {
        Monomial rest;
        std::int64_t e = 0;
        for (const auto& [v, ex] : m) {
            if (v == "t") {
                require(ex.is_integer() && ex.num >= 0, "curve: polynomial in t expected");
                e = ex.num;
            } else {
                rest.push_back({v, ex});
            }
        }
        r.add(e, PerfPoly::monomial(q.p(), 1, rest) * PerfPoly::constant(q.p(), c));
    }
    return r;
}

/// Invert a series of order 0 whose constant coefficient is a nonzero
/// element of F_p (parameters may appear only in higher terms).
inline Series series_invert(const Series& s) {
    require(!s.coeffs.empty() && s.coeffs.begin()->first == 0,
            "series_invert: series must have order 0");
    const PerfPoly& a0 = s.coeffs.begin()->second;
    require(a0.is_constant(), "series_invert: leading coefficient must lie in F_p");
    FpElem inv0 = a0.constant_value().inv();
    Series r = series_zero(s.p, s.trunc_order);
    std::map<std::int64_t, PerfPoly> b;
    b.emplace(0, PerfPoly::constant(s.p, inv0.value()));
    for (std::int64_t n = 1; n < s.trunc_order; ++n) {
        PerfPoly acc = PerfPoly::zero(s.p);
        for (const auto& [k, ak] : s.coeffs) {
            if (k < 1 || k > n) continue;
            auto it = b.find(n - k);
            if (it != b.end()) acc = acc + ak * it->second;
        }
        if (!acc.is_zero()) b.emplace(n, -(acc * PerfPoly::constant(s.p, inv0.value())));
    }
    for (const auto& [e, c] : b) r.add(e, c);
    return r;
}

inline Series series_pow(const Series& s, std::int64_t e, std::int64_t trunc) {
    Series r = series_zero(s.p, trunc);
    r.add(0, PerfPoly::constant(s.p, 1));
    Series base = s;
    bool inv = e < 0;
    std::uint64_t k = static_cast<std::uint64_t>(inv ? -e : e);
    if (inv) base = series_invert(base);
    while (k) {
        if (k & 1) r = series_mul(r, base);
        base = series_mul(base, base);
        k >>= 1;
    }
    r.trunc_order = std::min(r.trunc_order, trunc);
    std::map<std::int64_t, PerfPoly> kept;
    for (const auto& [ee, c] : r.coeffs)
        if (ee < r.trunc_order) kept.emplace(ee, c);
    r.coeffs = std::move(kept);
    return r;
}

inline std::int64_t pole_order(const Series& s) {
    if (s.coeffs.empty() || s.coeffs.begin()->first >= 0) return 0;
    return -s.coeffs.begin()->first;
}

/// p-reduction of the polar part: replace c*t^(-j) with pth_root(c)*t^(-j/p)
/// while p | j, termwise to full depth. Coefficients live in the perfection
/// so every coefficient has a p-th root. The regular part is preserved.
inline Series wp_reduce(const Series& s) {
    Series r = series_zero(s.p, s.trunc_order);
    for (const auto& [e, c] : s.coeffs) {
        if (e >= 0) {
            r.add(e, c);
            continue;
        }
        std::int64_t j = -e;
        std::uint32_t k = 0;
        while (j % static_cast<std::int64_t>(s.p) == 0) {
            j /= static_cast<std::int64_t>(s.p);
            ++k;
        }
        r.add(-j, c.pth_root(k));
    }
    return r;
}

/// One-variable dilatation regularity: delta_r(h) = h(t + u*t^r) - h(t) has
/// no polar part. Only the polar part of h matters; the substitution sends
/// t^(-j) to t^(-j) * (1 + u*t^(r-1))^(-j).
inline bool delta1_regular(const Series& h, std::int64_t r) {
    const std::uint32_t p = h.p;
    for (const auto& [e, c] : h.coeffs) {
        if (e >= 0) continue;
        std::int64_t j = -e;
        // (1 + u*t^(r-1))^(-j) - 1, polar contributions only: orders k(r-1)-j < 0
        Series unit = series_zero(p, j + 1);
        unit.add(0, PerfPoly::constant(p, 1));
        unit.add(r - 1, PerfPoly::variable(p, "u"));
        Series inv = series_pow(unit, -j, j + 1);
        inv.add(0, -PerfPoly::constant(p, 1));
        for (const auto& [k, ck] : inv.coeffs)
            if (k - j < 0 && !ck.is_zero()) return false;
    }
    return true;
}

/// Non-logarithmic slope of the one-variable character t^p - t = h: the
/// smallest r >= 2 with delta_r regular, or 1 when the reduced polar part
/// vanishes. Cross-checked against the classical value (reduced pole + 1).
inline std::int64_t slope1(const Series& h) {
    Series red = wp_reduce(h);
    std::int64_t sw = pole_order(red);
    if (sw == 0) return 1;
    for (std::int64_t r = 2; r <= sw + 1; ++r) {
        if (delta1_regular(red, r)) {
            check_internal(r == sw + 1, "slope1: dilatation search disagrees with pole order + 1");
            return r;
        }
    }
    throw internal_error("slope1: regularity search exceeded pole order + 1");
}

}  // namespace curve1

/// A parameterized curve x = x(t), y = y(t): polynomials in t with
/// coefficients in the perfection of F_p[params], x(t) = t^e * unit, e >= 1.
struct CurveParam {
    PerfPoly x;
    PerfPoly y;
};

struct CurveRestriction {
    std::int64_t dimtot;     // total dimension of the restricted character at t = 0
    std::int64_t contact_e;  // ord_t x(t), the intersection multiplicity with D
    std::int64_t swan;       // Swan conductor of the restriction
};

/// Pull the character back along the curve and measure its one-variable
/// ramification at t = 0 with the independent engine. The truncation order
/// is refined by doubling until the polar part stabilizes.
inline CurveRestriction restrict_to_curve(const ASCharacter& ch, const CurveParam& curve,
                                          std::int64_t trunc_hint = 0) {
    validate_character(ch);
    const std::uint32_t p = ch.p;
    require(!curve.x.is_zero(), "restrict_to_curve: zero curve (x(t) = 0)");
    PerfPoly f = reduce_f(ch);

    curve1::Series xs = curve1::series_from_poly(curve.x, 1 << 20);
    require(!xs.coeffs.empty() && xs.coeffs.begin()->first >= 1,
            "restrict_to_curve: x(t) must vanish at t = 0");
    std::int64_t e = xs.coeffs.begin()->first;
    std::int64_t max_pole = x_pole_order(f);

    auto pullback = [&](std::int64_t T) {
        curve1::Series acc = curve1::series_zero(p, T);
        curve1::Series xt = curve1::series_from_poly(curve.x, T + e * (max_pole + 1));
        curve1::Series yt = curve1::series_from_poly(curve.y, T + e * (max_pole + 1));
        // shift x = t^e * unit so the unit is honestly invertible
        curve1::Series unit = curve1::series_zero(p, xt.trunc_order - e);
        for (const auto& [ee, c] : xt.coeffs) unit.add(ee - e, c);
        for (const auto& [m, c] : f.terms()) {
            std::int64_t a = f.exponent_of(m, "y").num;
            std::int64_t b = f.exponent_of(m, "x").num;
            curve1::Series term = curve1::series_zero(p, T);
            term.add(0, PerfPoly::constant(p, c));
            if (a != 0) term = curve1::series_mul(term, curve1::series_pow(yt, a, T + e * (max_pole + 1)));
            if (b != 0) {
                curve1::Series xpow = curve1::series_pow(unit, b, T + e * (max_pole + 1));
                curve1::Series shifted = curve1::series_zero(p, xpow.trunc_order + e * b);
                for (const auto& [ee, cc] : xpow.coeffs) shifted.add(ee + e * b, cc);
                term = curve1::series_mul(term, shifted);
            }
            acc = curve1::series_add(acc, term);
        }
        return acc;
    };

    std::int64_t T = trunc_hint > 0 ? trunc_hint : e * max_pole + 2;
    curve1::Series h1 = curve1::wp_reduce(pullback(T));
    curve1::Series h2 = curve1::wp_reduce(pullback(2 * T));
    auto polar = [](const curve1::Series& s) {
        std::map<std::int64_t, PerfPoly> m;
        for (const auto& [ee, c] : s.coeffs)
            if (ee < 0) m.emplace(ee, c);
        return m;
    };
    require(polar(h1) == polar(h2), "restrict_to_curve: truncation instability");

    std::int64_t sw = curve1::pole_order(h1);
    std::int64_t r = curve1::slope1(h1);
    std::int64_t dimtot = r >= 2 ? r : 1;
    return CurveRestriction{dimtot, e, sw};
}

}  // namespace wildram
