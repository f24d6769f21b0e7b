#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "wildram/cycles.hpp"
#include "wildram/errors.hpp"

namespace wildram {

/// Numerical model of a smooth projective surface: Picard lattice,
/// canonical class in that basis, and the topological Euler number
/// (= deg c_2 of the cotangent bundle, a model datum).
struct SurfaceModel {
    std::string name;
    std::vector<std::vector<long long>> intersection_matrix;  // symmetric
    std::vector<Rational> canonical_class;
    long long chi_top;
};

struct DivisorClass {
    std::vector<Rational> coefficients;
};

inline SurfaceModel make_surface(std::string name, std::vector<std::vector<long long>> matrix,
                                 std::vector<Rational> canonical, long long chi_top) {
    std::size_t n = matrix.size();
    require(canonical.size() == n, "SurfaceModel: canonical class dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        require(matrix[i].size() == n, "SurfaceModel: intersection matrix must be square");
        for (std::size_t j = 0; j < n; ++j)
            require(matrix[i][j] == matrix[j][i], "SurfaceModel: intersection matrix must be symmetric");
    }
    return SurfaceModel{std::move(name), std::move(matrix), std::move(canonical), chi_top};
}

inline SurfaceModel surface_p2() { return make_surface("P2", {{1}}, {Rational(-3)}, 3); }

inline SurfaceModel surface_p1xp1() {
    return make_surface("P1xP1", {{0, 1}, {1, 0}}, {Rational(-2), Rational(-2)}, 4);
}

inline Rational intersect(const SurfaceModel& m, const DivisorClass& a, const DivisorClass& b) {
    std::size_t n = m.intersection_matrix.size();
    require(a.coefficients.size() == n && b.coefficients.size() == n,
            "intersect: divisor class dimension mismatch");
    Rational acc(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            acc += a.coefficients[i] * Rational(m.intersection_matrix[i][j]) * b.coefficients[j];
    return acc;
}

/// chi_c(U, F) = rank * (chi_top + (K + R) * R) for F totally wildly
/// ramified and non-degenerate along D with slope divisor R. The correction
/// (K + R) * R is the dimension-0 part of c(Omega^1)(1-R)^{-1}[R] expanded
/// on a surface; it is pinned to the P^2 example before any other use.
inline long long euler_number(const SurfaceModel& m, long long rank, const DivisorClass& R,
                              bool totally_wild) {
    require(totally_wild, "euler_number: formula requires a totally wild non-degenerate witness");
    require(rank >= 1, "euler_number: rank must be >= 1");
    DivisorClass KR{m.canonical_class};
    for (std::size_t i = 0; i < KR.coefficients.size(); ++i) KR.coefficients[i] += R.coefficients[i];
    Rational corr = intersect(m, KR, R);
    Rational chi = Rational(rank) * (Rational(m.chi_top) + corr);
    if (chi.denominator() != 1)
        throw internal_error("euler_number: non-integer Euler characteristic " +
                             std::to_string(chi.numerator()) + "/" + std::to_string(chi.denominator()));
    return chi.numerator();
}

/// chi(Y) = chi_top + sum over the p-1 nontrivial characters of chi_c(U, L_chi).
inline long long covering_euler(const SurfaceModel& m, std::uint32_t p,
                                const std::vector<long long>& chi_per_character) {
    require(chi_per_character.size() == p - 1,
            "covering_euler: need one chi_c per nontrivial character");
    long long total = m.chi_top;
    for (long long c : chi_per_character) total += c;
    return total;
}

inline long long covering_euler(const SurfaceModel& m, std::uint32_t p, long long shared_chi) {
    return covering_euler(m, p, std::vector<long long>(p - 1, shared_chi));
}

/// Grothendieck-Ogg-Shafarevich on a curve: chi_c(U, F) = rank*chi_c(U) - sum of Swan conductors.
inline long long gos_curve(long long rank, long long chi_c_open, const std::vector<long long>& swans) {
    long long total = rank * chi_c_open;
    for (long long s : swans) {
        require(s >= 0, "gos_curve: Swan conductors are nonnegative");
        total -= s;
    }
    return total;
}

}  // namespace wildram
