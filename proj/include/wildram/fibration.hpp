#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "wildram/errors.hpp"
#include "wildram/fpunivar.hpp"
#include "wildram/perfpoly.hpp"
#include "wildram/projective.hpp"
#include "wildram/surface.hpp"

namespace wildram {

/// Independent check of the intersection-theoretic Euler number: fiber the
/// plane over one axis, compute each fiber's chi_c by one-variable
/// Grothendieck-Ogg-Shafarevich, and sum over a stratification of the base.
///
/// Exactness demands vanishing fiber cohomology over the open stratum, i.e.
/// the generic p-reduced fiber polynomial must have degree exactly 1 in the
/// fiber variable (then RGamma_c(A^1, L) = 0 and the open stratum
/// contributes 0). Fibers over the finitely many exceptional base points
/// contribute chi_c = 1 - Swan each. Inputs outside this class are refused.
inline long long fibration_oracle(std::uint32_t p, const PerfPoly& f, char direction) {
    require(direction == 'x' || direction == 'y', "fibration_oracle: direction must be 'x' or 'y'");
    require_affine_polynomial(f);
    // base coordinate becomes the parameter c, the other coordinate is the fiber variable
    PerfPoly g = direction == 'x' ? f.rename("x", "c") : f.rename("y", "c").rename("x", "y");
    PerfPoly red = artin_schreier_reduce(g, {"y"});

    // split by fiber degree
    std::map<std::int64_t, PerfPoly> by_deg;
    for (const auto& [m, c] : red.terms()) {
        PerfExp ey = red.exponent_of(m, "y");
        check_internal(ey.is_integer() && ey.num >= 0, "fibration_oracle: reduced fiber degree");
        Monomial rest;
        for (const auto& [v, e] : m)
            if (v != "y") rest.push_back({v, e});
        auto it = by_deg.find(ey.num);
        if (it == by_deg.end()) it = by_deg.emplace(ey.num, PerfPoly::zero(p)).first;
        it->second.add_term(rest, c);
    }
    std::int64_t J = 0;
    for (const auto& [j, b] : by_deg)
        if (j >= 1 && !b.is_zero()) J = std::max(J, j);

    if (J == 0) {
        PerfPoly b0 = by_deg.count(0) ? by_deg.at(0) : PerfPoly::zero(p);
        if (b0.is_constant()) return 1;  // geometrically constant sheaf on A^2
        throw precondition_error(
            "fibration_oracle: non-stratifiable input: fibers are trivial but the class is "
            "twisted along the base; the stratified fiberwise sum does not compute chi_c");
    }
    if (J >= 2)
        throw precondition_error(
            "fibration_oracle: generic reduced fiber degree " + std::to_string(J) +
            " >= 2: fiber cohomology does not vanish on the open stratum, so the stratified "
            "fiberwise sum is not exact for this input");

    // J = 1: the open stratum contributes chi_c(stratum) * (1 - Swan) = 0
    // since RGamma_c of those fibers vanishes. Each geometric root of b_1
    // carries a fiber whose wild coefficients all vanish, so chi_c = 1.
    univar::Poly shadow = univariate_shadow(by_deg.at(1), "c");
    long long n_exceptional = std::max(0, univar::deg(univar::radical(shadow, p)));
    long long chi = (1 - n_exceptional) * gos_curve(1, 1, {J})  // open stratum, = 0
                    + n_exceptional * gos_curve(1, 1, {});      // trivial exceptional fibers
    return chi;
}

}  // namespace wildram
