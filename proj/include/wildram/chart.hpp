#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wildram/errors.hpp"
#include "wildram/perfpoly.hpp"

namespace wildram {

/// An affine chart ring k[poly_vars][laurent_vars^(+-1)][1/units]. Each unit
/// must be congruent to a nonzero constant modulo the boundary variable.
struct ChartRing {
    std::uint32_t p;
    std::string boundary;  // the distinguished boundary variable, "x" in every built-in chart
    std::vector<std::string> poly_vars;
    std::vector<std::string> laurent_vars;
    std::vector<PerfPoly> units;
};

inline FpElem unit_constant_term(const ChartRing& chart, const PerfPoly& unit) {
    PerfPoly c0 = PerfPoly::zero(chart.p);
    for (const auto& [m, c] : unit.terms()) {
        PerfExp e = unit.exponent_of(m, chart.boundary);
        if (e.is_zero()) c0.add_term(m, c);
    }
    require(c0.is_constant() && !c0.constant_value().is_zero(),
            "ChartRing: unit must be a nonzero constant modulo " + chart.boundary);
    return c0.constant_value();
}

inline ChartRing make_chart(std::uint32_t p, std::string boundary, std::vector<std::string> poly_vars,
                            std::vector<std::string> laurent_vars, std::vector<PerfPoly> units) {
    ChartRing c{p, std::move(boundary), std::move(poly_vars), std::move(laurent_vars), std::move(units)};
    for (const auto& u : c.units) unit_constant_term(c, u);
    return c;
}

/// numerator / (x^x_pole * prod units[i]^unit_powers[i]); canonical form has
/// x not dividing the numerator whenever x_pole > 0.
struct ChartElem {
    PerfPoly numerator;
    std::int64_t x_pole = 0;
    std::vector<std::int64_t> unit_powers;  // parallel to chart.units
};

inline ChartElem make_chart_elem(const ChartRing& chart, PerfPoly numerator, std::int64_t x_pole,
                                 std::vector<std::int64_t> unit_powers) {
    require(unit_powers.size() <= chart.units.size(), "ChartElem: unregistered unit denominator");
    unit_powers.resize(chart.units.size(), 0);
    for (auto k : unit_powers) require(k >= 0, "ChartElem: unit powers must be nonnegative");
    require(x_pole >= 0, "ChartElem: x_pole must be nonnegative");
    // canonicalize: divide out common powers of the boundary variable
    if (!numerator.is_zero() && x_pole > 0) {
        PerfExp mn = numerator.min_exponent(chart.boundary);
        require(mn.is_integer() && mn.num >= 0, "ChartElem: numerator must be polynomial in " + chart.boundary);
        std::int64_t shift = std::min(mn.num, x_pole);
        if (shift > 0) {
            PerfPoly xs = PerfPoly::variable(chart.p, chart.boundary, PerfExp{-shift, 0});
            numerator = numerator * xs;
            x_pole -= shift;
        }
    }
    if (numerator.is_zero()) {
        x_pole = 0;
        for (auto& k : unit_powers) k = 0;
    }
    return ChartElem{std::move(numerator), x_pole, std::move(unit_powers)};
}

/// Membership test for the chart ring: since the units are invertible and
/// coprime to x, the element is regular iff x^x_pole divides the numerator.
/// (Equivalently: the unit inverses, expanded as power series in x to order
/// x_pole, leave no residual pole.)
inline bool is_regular_on_chart(const ChartRing& chart, const ChartElem& e) {
    require(e.unit_powers.size() == chart.units.size(), "ChartElem: unregistered unit denominator");
    if (e.numerator.is_zero() || e.x_pole == 0) return true;
    PerfExp mn = e.numerator.min_exponent(chart.boundary);
    return mn.is_integer() && mn.num >= e.x_pole;
}

/// The value modulo x of a regular chart element: (numerator/x^N mod x)
/// times the inverses of the units' constant terms.
inline std::optional<PerfPoly> normal_form_mod_x(const ChartRing& chart, const ChartElem& e) {
    if (!is_regular_on_chart(chart, e)) return std::nullopt;
    PerfPoly shifted =
        e.numerator * PerfPoly::variable(chart.p, chart.boundary, PerfExp{-e.x_pole, 0});
    PerfPoly mod_x = PerfPoly::zero(chart.p);
    for (const auto& [m, c] : shifted.terms())
        if (shifted.exponent_of(m, chart.boundary).is_zero()) mod_x.add_term(m, c);
    FpElem scale(1, chart.p);
    for (std::size_t i = 0; i < chart.units.size(); ++i)
        if (e.unit_powers[i] > 0)
            scale = scale * unit_constant_term(chart, chart.units[i]).inv().pow(e.unit_powers[i]);
    return mod_x * PerfPoly::constant(chart.p, scale.value());
}

/// Affine dilatation presentation A~ = A[I/t]: relations t*T_i - g_i.
struct DilatationPresentation {
    std::vector<std::string> base_vars;
    PerfPoly divisor_elem = PerfPoly::zero(2);  // t; always overwritten by the builders
    std::vector<PerfPoly> ideal_gens; // g_1..g_m
    std::vector<std::string> new_vars;
    std::vector<PerfPoly> relations;  // t*T_i - g_i (or a custom relation set)
    std::vector<std::string> laurent_vars;  // invertible new variables, if any
    std::int64_t pullback_multiplicity = 1; // f^*D = m * D~ bookkeeping
};

inline DilatationPresentation dilate_affine(const std::vector<std::string>& base_vars,
                                            const PerfPoly& t,
                                            const std::vector<PerfPoly>& ideal_gens) {
    require(!t.is_zero(), "dilate_affine: divisor element t must be nonzero");
    require(!ideal_gens.empty(), "dilate_affine: need at least one ideal generator");
    DilatationPresentation pres;
    pres.base_vars = base_vars;
    pres.divisor_elem = t;
    pres.ideal_gens = ideal_gens;
    for (std::size_t i = 0; i < ideal_gens.size(); ++i) {
        std::string T = "T" + std::to_string(i + 1);
        pres.new_vars.push_back(T);
        pres.relations.push_back(t * PerfPoly::variable(t.p(), T) - ideal_gens[i]);
    }
    return pres;
}

/// Substitution check: each relation, linear in its new variable T_i, must
/// vanish identically under T_i := g_i/t in the localization at t. Writing
/// the relation as A*T_i + B, that means A*g_i + B*t = 0 after clearing the
/// denominator.
inline bool presentation_relations_vanish(const DilatationPresentation& pres) {
    for (std::size_t i = 0; i < pres.relations.size() && i < pres.ideal_gens.size(); ++i) {
        const PerfPoly& rel = pres.relations[i];
        const std::string& T = pres.new_vars[i];
        PerfPoly A = rel.coefficient_of(T);
        PerfPoly B = rel.substitute(T, PerfPoly::zero(rel.p()));
        PerfPoly cleared = A * pres.ideal_gens[i] + B * pres.divisor_elem;
        if (!cleared.is_zero()) return false;
    }
    return true;
}

/// The wild chart of P_1^(R) for X = A^2, D = {x=0}, R = rD: polynomial
/// variables x,y,u,v, unit s = 1 + u*x^(r-1), with the substitution
/// x' = x + u*x^r, y' = y + v*x^r.
struct P1RChart {
    ChartRing ring;
    PerfPoly x_image;  // x' in terms of x,u
    PerfPoly y_image;  // y' in terms of y,v,x
    std::int64_t r;
    std::int64_t boundary_twist;  // normal-bundle twist degree, -r per component
};

inline P1RChart chart_P1R(std::uint32_t p, std::int64_t r) {
    require(r >= 2, "chart_P1R: r must be >= 2 (tame range has no wild chart)");
    PerfPoly x = PerfPoly::variable(p, "x");
    PerfPoly y = PerfPoly::variable(p, "y");
    PerfPoly u = PerfPoly::variable(p, "u");
    PerfPoly v = PerfPoly::variable(p, "v");
    PerfPoly xr = PerfPoly::variable(p, "x", PerfExp{r, 0});
    PerfPoly s = PerfPoly::constant(p, 1) + u * PerfPoly::variable(p, "x", PerfExp{r - 1, 0});
    ChartRing ring = make_chart(p, "x", {"x", "y", "u", "v"}, {}, {s});
    return P1RChart{std::move(ring), x + u * xr, y + v * xr, r, -r};
}

/// The chart of X~^(M) for one boundary component with multiplicity m:
/// Spec k[T,S,U^(+-1)]/(T - U*S^m), with pullback f^*D = m*D~.
inline DilatationPresentation tilde_X_M_chart(std::uint32_t p, std::int64_t m) {
    require(m >= 1, "tilde_X_M_chart: multiplicity must be >= 1");
    DilatationPresentation pres;
    pres.base_vars = {"T"};
    pres.divisor_elem = PerfPoly::variable(p, "T");
    pres.new_vars = {"S", "U"};
    pres.laurent_vars = {"U"};
    PerfPoly rel = PerfPoly::variable(p, "T") -
                   PerfPoly::variable(p, "U") * PerfPoly::variable(p, "S", PerfExp{m, 0});
    pres.relations = {rel};
    pres.pullback_multiplicity = m;
    return pres;
}

}  // namespace wildram
