#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wildram/chart.hpp"
#include "wildram/polyio.hpp"
#include "wildram/ramification.hpp"

using namespace wildram;

namespace {
std::mt19937 rng(7040326);

PerfPoly random_nonzero_poly(std::uint32_t p, const std::vector<std::string>& vars) {
    std::uniform_int_distribution<int> nterms(1, 3), coef(1, static_cast<int>(p) - 1), expo(0, 3);
    for (;;) {
        PerfPoly q(p);
        int n = nterms(rng);
        for (int i = 0; i < n; ++i) {
            Monomial m;
            for (const auto& v : vars) {
                PerfExp e{expo(rng), 0};
                if (!e.is_zero()) m.push_back({v, e});
            }
            q.add_term(m, coef(rng));
        }
        if (!q.is_zero()) return q;
    }
}
}  // namespace

TEST_CASE("dilate_affine: deformation to the normal cone patch and trivial case") {
    // vars {x,y}, t = x, gens {y}: relation x*T1 - y
    auto pres = dilate_affine({"x", "y"}, parse_poly(2, "x"), {parse_poly(2, "y")});
    REQUIRE(pres.relations.size() == 1);
    REQUIRE(pres.relations[0] == parse_poly(2, "x*T1 - y"));
    REQUIRE(presentation_relations_vanish(pres));

    // gens = {t}: relation t*T1 - t, T1 = 1 on the t-localization
    auto triv = dilate_affine({"x"}, parse_poly(3, "x"), {parse_poly(3, "x")});
    REQUIRE(triv.relations[0] == parse_poly(3, "x*T1 - x"));
    REQUIRE(triv.relations[0].substitute("T1", PerfPoly::constant(3, 1)).is_zero());

    // the P_1^(R) presentation: t = x^r, gens {x'-x, y'-y}
    auto p1r = dilate_affine({"x", "y", "x'", "y'"}, parse_poly(2, "x^3"),
                             {parse_poly(2, "x' - x"), parse_poly(2, "y' - y")});
    REQUIRE(p1r.relations.size() == 2);
    REQUIRE(p1r.relations[0] == parse_poly(2, "x^3*T1 + x' + x"));
    REQUIRE(presentation_relations_vanish(p1r));

    REQUIRE_THROWS_AS(dilate_affine({"x"}, PerfPoly::zero(2), {parse_poly(2, "x")}),
                      precondition_error);
}

TEST_CASE("dilate_affine relations vanish under T_i := g_i/t (200 random samples)") {
    for (int i = 0; i < 200; ++i) {
        std::uint32_t p = (i % 3 == 0) ? 2 : (i % 3 == 1) ? 3 : 5;
        PerfPoly t = random_nonzero_poly(p, {"x", "y"});
        std::vector<PerfPoly> gens{random_nonzero_poly(p, {"x", "y"}),
                                   random_nonzero_poly(p, {"x", "y"})};
        REQUIRE(presentation_relations_vanish(dilate_affine({"x", "y"}, t, gens)));
    }
}

TEST_CASE("chart_P1R: unit, substitution, identity section, boundary twist") {
    auto c2 = chart_P1R(2, 2);
    REQUIRE(c2.ring.units.size() == 1);
    REQUIRE(c2.ring.units[0] == parse_poly(2, "1 + u*x"));
    REQUIRE(c2.x_image == parse_poly(2, "x + u*x^2"));
    REQUIRE(c2.y_image == parse_poly(2, "y + v*x^2"));

    // substitution at u = v = 0 is the identity on (x, y)
    REQUIRE(c2.x_image.evaluate("u", FpElem(0, 2)) == parse_poly(2, "x"));
    REQUIRE(c2.y_image.evaluate("v", FpElem(0, 2)) == parse_poly(2, "y"));

    auto c4 = chart_P1R(2, 4);
    REQUIRE(c4.x_image == parse_poly(2, "x + u*x^4"));
    REQUIRE(c4.boundary_twist == -4);

    REQUIRE_THROWS_AS(chart_P1R(2, 1), precondition_error);
}

TEST_CASE("tilde_X_M_chart: torsor case, m = 2, pullback bookkeeping") {
    auto m1 = tilde_X_M_chart(2, 1);
    REQUIRE(m1.relations[0] == parse_poly(2, "T - U*S"));
    REQUIRE(m1.laurent_vars == std::vector<std::string>{"U"});
    REQUIRE(m1.pullback_multiplicity == 1);

    auto m2 = tilde_X_M_chart(3, 2);
    REQUIRE(m2.relations[0] == parse_poly(3, "T - U*S^2"));
    REQUIRE(m2.pullback_multiplicity == 2);

    REQUIRE_THROWS_AS(tilde_X_M_chart(2, 0), precondition_error);
}

TEST_CASE("is_regular_on_chart: egAS.1 element, visible pole, y/x^3 at r=3 vs r=4") {
    // e = (1/x^n)((1+u*x^n)^(-n) - 1) at r = n+1: numerator 1-(1+u*x^n)^n over x^n*s^n
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (std::int64_t n = 1; n <= 5; ++n) {
            if (n % p == 0) continue;
            auto chart = chart_P1R(p, n + 1);
            PerfPoly s = chart.ring.units[0];
            PerfPoly num = PerfPoly::constant(p, 1) - s.pow(static_cast<std::uint32_t>(n));
            ChartElem e = make_chart_elem(chart.ring, num, n, {n});
            REQUIRE(is_regular_on_chart(chart.ring, e));
            auto nf = normal_form_mod_x(chart.ring, e);
            REQUIRE(nf.has_value());
            // congruent to -n*u modulo x
            PerfPoly expect = PerfPoly::constant(p, -static_cast<std::int64_t>(n % p)) * parse_poly(p, "u");
            REQUIRE(*nf == expect);
        }
    }

    // u/x has a visible pole
    auto chart = chart_P1R(2, 2);
    ChartElem pole = make_chart_elem(chart.ring, parse_poly(2, "u"), 1, {0});
    REQUIRE_FALSE(is_regular_on_chart(chart.ring, pole));

    // p=2, f = y/x^3: delta has a residual pole at r=3 (a -3*y*u/x term), regular at r=4
    PerfPoly f = parse_poly(2, "y/x^3");
    REQUIRE_FALSE(delta_regular(chart_P1R(2, 3), f));
    REQUIRE(delta_regular(chart_P1R(2, 4), f));
}

TEST_CASE("regularity is monotone in r on a generated corpus") {
    std::uniform_int_distribution<int> poleord(1, 5), ycoef(0, 3);
    for (int i = 0; i < 60; ++i) {
        std::uint32_t p = (i % 2 == 0) ? 2 : 3;
        PerfPoly f(p);
        int terms = 1 + i % 3;
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            m.push_back({"x", PerfExp{-poleord(rng), 0}});
            int a = ycoef(rng);
            if (a > 0) m.push_back({"y", PerfExp{a, 0}});
            f.add_term(m, 1 + static_cast<std::uint32_t>(ycoef(rng)) % (p - 1));
        }
        if (f.is_zero()) continue;
        ASCharacter ch = make_character(p, f);
        PerfPoly fr = reduce_f(ch);
        if (x_pole_order(fr) == 0) continue;
        std::int64_t r0 = slope(ch);
        for (std::int64_t r = std::max<std::int64_t>(2, r0); r <= r0 + 3; ++r)
            REQUIRE(delta_regular(chart_P1R(p, r), fr));
        for (std::int64_t r = 2; r < r0; ++r) REQUIRE_FALSE(delta_regular(chart_P1R(p, r), fr));
    }
}

TEST_CASE("normal-bundle twist bookkeeping equals -r per component") {
    for (std::int64_t r = 2; r <= 6; ++r) REQUIRE(chart_P1R(3, r).boundary_twist == -r);
}
