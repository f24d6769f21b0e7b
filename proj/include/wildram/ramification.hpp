#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "wildram/chart.hpp"
#include "wildram/errors.hpp"
#include "wildram/fpunivar.hpp"
#include "wildram/perfpoly.hpp"

namespace wildram {

/// A rank-1 Artin-Schreier character t^p - t = f, with f a Laurent function
/// in the boundary variable x whose coefficients lie in F_p[y]; poles only
/// along the named divisor component x = 0.
struct ASCharacter {
    std::uint32_t p;
    PerfPoly f;
    std::string component = "D";
};

inline void validate_character(const ASCharacter& ch) {
    require(ch.f.p() == ch.p, "ASCharacter: characteristic mismatch");
    for (const auto& [m, c] : ch.f.terms()) {
        for (const auto& [v, e] : m) {
            require(v == "x" || v == "y", "ASCharacter: f must be a function of x and y, found " + v);
            require(e.is_integer(), "ASCharacter: f must have integer exponents");
            if (v == "y") require(e.num >= 0, "ASCharacter: poles are allowed only along x = 0");
        }
    }
}

inline ASCharacter make_character(std::uint32_t p, const PerfPoly& f, std::string component = "D") {
    ASCharacter ch{p, f, std::move(component)};
    validate_character(ch);
    return ch;
}

/// The p-reduction of the defining function: replace c*y^a/x^b (b > 0) by
/// c*y^(a/p)/x^(b/p) whenever p divides both a and b; each term is rooted to
/// full depth, merges may cancel. Exponents stay integral. Idempotent.
inline PerfPoly reduce_f(const ASCharacter& ch) {
    const std::uint32_t p = ch.p;
    PerfPoly r = PerfPoly::zero(p);
    for (const auto& [m, c] : ch.f.terms()) {
        PerfExp ex = ch.f.exponent_of(m, "x");
        PerfExp ey = ch.f.exponent_of(m, "y");
        std::uint32_t k = 0;
        if (ex.num < 0) {
            auto vp = [p](std::int64_t n) {
                if (n == 0) return 40u;
                std::uint32_t d = 0;
                while (n % static_cast<std::int64_t>(p) == 0 && d < 40) n /= p, ++d;
                return d;
            };
            k = std::min(vp(ex.num), vp(ey.num));
        }
        Monomial rm;  // "x" < "y" keeps the monomial sorted
        std::int64_t div = 1;
        for (std::uint32_t i = 0; i < k; ++i) div *= p;
        if (ex.num / div != 0) rm.push_back({"x", PerfExp{ex.num / div, 0}});
        if (ey.num / div != 0) rm.push_back({"y", PerfExp{ey.num / div, 0}});
        r.add_term(rm, c);
    }
    return r;
}

/// Pole order of a reduced Laurent function along x = 0; 0 if pole-free.
inline std::int64_t x_pole_order(const PerfPoly& f) {
    PerfExp mn = f.min_exponent("x");
    return mn.num < 0 ? -mn.num : 0;
}

/// delta_r(f) = f(x + u*x^r, y + v*x^r) - f(x, y) as a chart element over
/// x^B * s^B with s = 1 + u*x^(r-1).
inline ChartElem dilatation_difference(const P1RChart& chart, const PerfPoly& f) {
    const std::uint32_t p = chart.ring.p;
    const std::int64_t r = chart.r;
    std::int64_t B = x_pole_order(f);
    PerfPoly s = PerfPoly::constant(p, 1) +
                 PerfPoly::variable(p, "u") * PerfPoly::variable(p, "x", PerfExp{r - 1, 0});
    PerfPoly y_sub = PerfPoly::variable(p, "y") +
                     PerfPoly::variable(p, "v") * PerfPoly::variable(p, "x", PerfExp{r, 0});
    PerfPoly N = PerfPoly::zero(p);
    for (const auto& [m, c] : f.terms()) {
        std::int64_t a = f.exponent_of(m, "y").num;
        std::int64_t e = f.exponent_of(m, "x").num;
        check_internal(e + B >= 0, "dilatation_difference: pole bound");
        PerfPoly xpow = PerfPoly::variable(p, "x", PerfExp{e + B, 0});
        if (e + B == 0) xpow = PerfPoly::constant(p, 1);
        PerfPoly ya = a == 0 ? PerfPoly::constant(p, 1)
                             : PerfPoly::variable(p, "y", PerfExp{a, 0});
        PerfPoly ya_sub = a == 0 ? PerfPoly::constant(p, 1)
                                 : y_sub.pow(static_cast<std::uint32_t>(a));
        PerfPoly term = PerfPoly::constant(p, c) * xpow *
                        (ya_sub * s.pow(static_cast<std::uint32_t>(e + B)) -
                         ya * s.pow(static_cast<std::uint32_t>(B)));
        N = N + term;
    }
    return make_chart_elem(chart.ring, N, B, {B});
}

inline bool delta_regular(const P1RChart& chart, const PerfPoly& f) {
    return is_regular_on_chart(chart.ring, dilatation_difference(chart, f));
}

/// Smallest integer r >= 2 with delta_r regular on the wild chart; 1 when
/// the reduced function has no pole (tame/unramified). The search cannot
/// pass pole order + 1.
inline std::int64_t slope(const ASCharacter& ch) {
    PerfPoly f = reduce_f(ch);
    std::int64_t B = x_pole_order(f);
    if (B == 0) return 1;
    for (std::int64_t r = 2; r <= B + 1; ++r) {
        if (delta_regular(chart_P1R(ch.p, r), f)) return r;
    }
    throw internal_error("slope: regularity search exceeded pole order + 1 (engine bug)");
}

/// Characteristic form at the generic point of the component: the linear
/// form alpha*u + beta*v over the perfection of F_p[y], its radicial depth,
/// and the degenerate locus in y.
struct CharForm {
    std::int64_t slope_r;
    PerfPoly alpha;
    PerfPoly beta;
    std::uint32_t radicial_depth;
    PerfPoly degenerate_locus;  // monic radical of the common-zero locus; 1 if empty
    std::int64_t twist;         // the divisor twist r*D, stored as its multiple r
    std::string component;
};

struct RamificationReport {
    ASCharacter character;
    PerfPoly reduced_f;
    std::int64_t slope_r;
    std::int64_t swan;
    std::int64_t dimtot;
    std::optional<CharForm> form;  // empty = tame/unramified marker
    ChartElem bounded_witness;     // regular normal form of delta at r = slope
    PerfPoly psi0;                 // witness mod x (before reduction, dual-oriented)
    PerfPoly stripped_constant;    // (u,v)-constant part removed from psi (identically 0 here)
};

inline CharForm char_form(const ASCharacter& ch) {
    std::int64_t r = slope(ch);
    if (r < 2) throw precondition_error("TameInput: char_form requires a wild character (slope >= 2)");
    PerfPoly f = reduce_f(ch);
    P1RChart chart = chart_P1R(ch.p, r);
    ChartElem delta = dilatation_difference(chart, f);
    auto psi_raw = normal_form_mod_x(chart.ring, delta);
    check_internal(psi_raw.has_value(), "char_form: delta not regular at r = slope");
    // Dual orientation: the dy-coordinate of the form pairs against
    // -(y'-y)/x^r, so negate v before reading coefficients.
    PerfPoly psi = psi_raw->substitute("v", -PerfPoly::variable(ch.p, "v"));
    auto [stripped, positive] = psi.split_active_constant({"u", "v"});
    PerfPoly reduced = artin_schreier_reduce(positive, {"u", "v"});
    if (!is_fp_linear(reduced, {"u", "v"}))
        throw internal_error("NonLinearForm: reduced form is not F_p-linear (engine bug)");
    PerfPoly alpha = reduced.coefficient_of("u");
    PerfPoly beta = reduced.coefficient_of("v");
    check_internal(!(alpha.is_zero() && beta.is_zero()),
                   "char_form: zero form at minimal slope (engine bug)");
    std::uint32_t depth = std::max(alpha.max_pdepth(), beta.max_pdepth());
    univar::Poly g = univar::gcd(alpha.is_zero() ? univar::Poly{} : univariate_shadow(alpha, "y"),
                                 beta.is_zero() ? univar::Poly{} : univariate_shadow(beta, "y"), ch.p);
    PerfPoly locus = univar_to_perfpoly(univar::radical(g, ch.p), ch.p, "y");
    return CharForm{r, alpha, beta, depth, locus, r, ch.component};
}

/// swan = maximal x-pole order of the reduced function, dimtot = slope for
/// wild characters and rank = 1 otherwise; the Hasse-Arf style bound
/// swan in {dimtot-1, dimtot} is asserted for wild inputs.
inline std::pair<std::int64_t, std::int64_t> swan_and_dimtot(const ASCharacter& ch) {
    PerfPoly f = reduce_f(ch);
    std::int64_t sw = x_pole_order(f);
    std::int64_t r = slope(ch);
    std::int64_t dt = r >= 2 ? r : 1;
    if (r >= 2)
        check_internal(sw == dt || sw == dt - 1, "swan_and_dimtot: Hasse-Arf bound violated (engine bug)");
    return {sw, dt};
}

inline RamificationReport analyze(const ASCharacter& ch) {
    validate_character(ch);
    PerfPoly f = reduce_f(ch);
    std::int64_t r = slope(ch);
    auto [sw, dt] = swan_and_dimtot(ch);
    RamificationReport rep{ch,
                           f,
                           r,
                           sw,
                           dt,
                           std::nullopt,
                           ChartElem{PerfPoly::zero(ch.p), 0, {}},
                           PerfPoly::zero(ch.p),
                           PerfPoly::zero(ch.p)};
    if (r >= 2) {
        P1RChart chart = chart_P1R(ch.p, r);
        rep.bounded_witness = dilatation_difference(chart, f);
        auto psi_raw = normal_form_mod_x(chart.ring, rep.bounded_witness);
        check_internal(psi_raw.has_value(), "analyze: witness not regular");
        PerfPoly psi = psi_raw->substitute("v", -PerfPoly::variable(ch.p, "v"));
        auto [stripped, positive] = psi.split_active_constant({"u", "v"});
        rep.psi0 = positive;
        rep.stripped_constant = stripped;
        rep.form = char_form(ch);
    }
    return rep;
}

/// Tangent-pairing test of Lemma-cut type: for a transversal curve with
/// tangent (dx, dy) at a point y = y0 of the component, the curve is
/// non-characteristic iff the form does not annihilate the tangent. beta is
/// stored against the dual coordinate -(y'-y)/x^r, so in (dx, dy) tangent
/// coordinates the pairing reads alpha(y0)*dx - beta(y0)*dy (the sign is
/// invisible in characteristic 2).
inline bool noncharacteristic_curve_test(const CharForm& form, FpElem dx, FpElem dy, FpElem y0) {
    require(!(dx.is_zero() && dy.is_zero()), "noncharacteristic_curve_test: zero tangent vector");
    PerfPoly a0 = form.alpha.evaluate("y", y0);
    PerfPoly b0 = form.beta.evaluate("y", y0);
    check_internal(a0.is_constant() && b0.is_constant(), "noncharacteristic_curve_test: evaluation");
    FpElem av = a0.constant_value();
    FpElem bv = b0.constant_value();
    if (av.is_zero() && bv.is_zero())
        throw precondition_error("noncharacteristic_curve_test: degenerate point y0 (form vanishes)");
    FpElem pairing = av * dx - bv * dy;
    return !pairing.is_zero();
}

}  // namespace wildram
