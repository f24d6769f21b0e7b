#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wildram/errors.hpp"
#include "wildram/ramification.hpp"

namespace wildram {

using Rational = boost::rational<long long>;

/// Per-component ramification datum of a sheaf isoclinic along each
/// component of a simple normal crossings divisor.
struct SheafComponent {
    std::string name;
    Rational slope;  // >= 1; wild <=> slope > 1
    bool wild;
    std::optional<CharForm> form;        // required when wild
    long long rank_multiplicity = 1;     // the rk_F value; identically 1 in rank-1 scope
};

struct SNCSheafData {
    int dim;  // d = dim X
    std::uint32_t p;
    long long rank;
    std::vector<SheafComponent> components;
    // Subsets I of tame-component indices with D_I nonempty (geometric input).
    // Empty means the default coordinate-crossing configuration: every subset
    // of tame components of size <= dim meets.
    std::vector<std::vector<std::size_t>> nonempty_strata;
};

inline void validate_sheaf(const SNCSheafData& s) {
    require(s.rank >= 1, "SNCSheafData: rank must be >= 1");
    require(s.dim >= 1, "SNCSheafData: dimension must be >= 1");
    for (const auto& c : s.components) {
        require(c.slope >= Rational(1), "SNCSheafData: slopes are >= 1");
        require(c.wild == (c.slope > Rational(1)), "SNCSheafData: wild <=> slope > 1");
        require(c.rank_multiplicity >= 1, "SNCSheafData: rank multiplicity must be >= 1");
    }
}

struct TotalDimDivisor {
    std::vector<std::pair<std::string, long long>> coefficients;
};

/// DT = sum_i r_i * rank * D_i; coefficients must come out integral.
inline TotalDimDivisor total_dimension_divisor(const SNCSheafData& s) {
    validate_sheaf(s);
    TotalDimDivisor dt;
    for (const auto& c : s.components) {
        Rational coeff = c.slope * Rational(s.rank);
        if (coeff.denominator() != 1)
            throw precondition_error("IntegralityViolation: total dimension divisor coefficient " +
                                     std::to_string(coeff.numerator()) + "/" +
                                     std::to_string(coeff.denominator()) + " on " + c.name);
        dt.coefficients.push_back({c.name, coeff.numerator()});
    }
    return dt;
}

struct CycleComponent {
    enum class Kind { ZeroSection, Conormal, LineImage };
    Kind kind;
    std::vector<std::size_t> tame_subset;  // Conormal: indices into components
    std::size_t wild_index = 0;            // LineImage: index into components
    std::uint32_t radicial_depth = 0;      // LineImage: depth of the radicial cover
    Rational coeff;
};

struct CotangentCycle {
    int dim;
    std::uint32_t p;
    std::vector<CycleComponent> components;
};

namespace detail {
inline long long p_power(std::uint32_t p, std::uint64_t e) {
    long long r = 1;
    while (e--) {
        check_internal(r < (1LL << 50), "p_power overflow");
        r *= p;
    }
    return r;
}
}  // namespace detail

/// The characteristic cycle (eqchar shape): sign (-1)^d times
///   rank * sum over nonempty tame strata I (I = {} is the zero section)
///   + sum over wild i of r_i * rk / p^(n_i (d-1)) on the form's line image.
inline CotangentCycle characteristic_cycle(const SNCSheafData& s) {
    validate_sheaf(s);
    CotangentCycle cyc{s.dim, s.p, {}};
    long long sign = s.dim % 2 == 0 ? 1 : -1;

    std::vector<std::size_t> tame;
    for (std::size_t i = 0; i < s.components.size(); ++i)
        if (!s.components[i].wild) tame.push_back(i);

    std::vector<std::vector<std::size_t>> strata = s.nonempty_strata;
    if (strata.empty()) {
        // default: coordinate-crossing configuration
        std::size_t n = tame.size();
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            std::vector<std::size_t> I;
            for (std::size_t j = 0; j < n; ++j)
                if (mask & (1ull << j)) I.push_back(tame[j]);
            if (I.size() <= static_cast<std::size_t>(s.dim)) strata.push_back(I);
        }
    } else {
        bool has_empty = false;
        for (const auto& I : strata) {
            for (auto i : I)
                require(i < s.components.size() && !s.components[i].wild,
                        "characteristic_cycle: strata must index tame components");
            has_empty = has_empty || I.empty();
        }
        require(has_empty, "characteristic_cycle: the empty stratum (zero section) is required");
    }

    for (const auto& I : strata) {
        CycleComponent cc{I.empty() ? CycleComponent::Kind::ZeroSection : CycleComponent::Kind::Conormal,
                          I, 0, 0, Rational(sign * s.rank)};
        cyc.components.push_back(std::move(cc));
    }
    for (std::size_t i = 0; i < s.components.size(); ++i) {
        const auto& c = s.components[i];
        if (!c.wild) continue;
        require(c.form.has_value(), "characteristic_cycle: missing characteristic form on wild component " + c.name);
        std::uint32_t n = c.form->radicial_depth;
        long long den = detail::p_power(s.p, static_cast<std::uint64_t>(n) * (s.dim - 1));
        Rational coeff = Rational(sign) * c.slope * Rational(c.rank_multiplicity, den);
        cyc.components.push_back(CycleComponent{CycleComponent::Kind::LineImage, {}, i, n, coeff});
    }
    return cyc;
}

struct IntegralityReport {
    std::vector<long long> denominators;  // distinct, sorted
    bool conjecture_holds;                // all coefficients integral (cnHA observation)
};

/// Hard assertion: every denominator is a power of p (prHA.1). Soft flag:
/// whether the cycle is integral (cnHA).
inline IntegralityReport check_integrality(const CotangentCycle& c) {
    std::set<long long> dens;
    bool integral = true;
    for (const auto& comp : c.components) {
        long long den = comp.coeff.denominator();
        if (den < 0) den = -den;
        dens.insert(den);
        if (den != 1) integral = false;
        long long d = den;
        while (d % c.p == 0) d /= c.p;
        if (d != 1)
            throw precondition_error("check_integrality: denominator " + std::to_string(den) +
                                     " has a prime factor different from p = " + std::to_string(c.p));
    }
    return IntegralityReport{{dens.begin(), dens.end()}, integral};
}

/// Contact data of a curve with the boundary components at a point.
struct CurveContact {
    std::string component;
    std::int64_t order;   // ord_t of the component equation along the curve
    bool contained = false;  // curve lies inside the component
};

/// (DT, C)_x = sum_i dt_i * ord_t(component_i along the curve).
inline std::int64_t curve_intersection(const TotalDimDivisor& dt,
                                       const std::vector<CurveContact>& contacts) {
    std::int64_t total = 0;
    for (const auto& [name, coeff] : dt.coefficients) {
        for (const auto& c : contacts) {
            if (c.component != name) continue;
            require(!c.contained, "curve_intersection: curve contained in component " + name +
                                      " (infinite contact)");
            require(c.order >= 0, "curve_intersection: negative contact order");
            total += coeff * c.order;
        }
    }
    return total;
}

}  // namespace wildram
