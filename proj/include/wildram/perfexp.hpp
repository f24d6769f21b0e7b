#pragma once

#include <cstdint>
#include <string>

#include "wildram/errors.hpp"

namespace wildram {

/// Exponent in Z[1/p]: the rational num / p^pdepth, normalized so that
/// pdepth = 0 or p does not divide num. These are the exponents of the
/// perfection A^{p^-inf}; the maximal pdepth in a form is its radicial depth.
struct PerfExp {
    std::int64_t num = 0;
    std::uint32_t pdepth = 0;

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return pdepth == 0; }
    bool is_nonneg() const { return num >= 0; }

    bool operator==(const PerfExp&) const = default;
};

inline PerfExp pe_make(std::int64_t num, std::uint32_t pdepth, std::uint32_t p) {
    if (num == 0) return {0, 0};
    while (pdepth > 0 && num % static_cast<std::int64_t>(p) == 0) {
        num /= static_cast<std::int64_t>(p);
        --pdepth;
    }
    return {num, pdepth};
}

inline __int128 pe_pow128(std::uint32_t p, std::uint32_t e) {
    check_internal(e <= 40, "PerfExp: p-depth out of range");
    __int128 r = 1;
    while (e--) r *= p;
    return r;
}

// Exact comparison of num_a/p^da with num_b/p^db.
inline int pe_cmp(const PerfExp& a, const PerfExp& b, std::uint32_t p) {
    __int128 lhs = static_cast<__int128>(a.num) * pe_pow128(p, b.pdepth);
    __int128 rhs = static_cast<__int128>(b.num) * pe_pow128(p, a.pdepth);
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

inline bool pe_eq(const PerfExp& a, const PerfExp& b) {
    return a.num == b.num && a.pdepth == b.pdepth;
}

inline PerfExp pe_add(const PerfExp& a, const PerfExp& b, std::uint32_t p) {
    std::uint32_t d = a.pdepth > b.pdepth ? a.pdepth : b.pdepth;
    __int128 n = static_cast<__int128>(a.num) * pe_pow128(p, d - a.pdepth) +
                 static_cast<__int128>(b.num) * pe_pow128(p, d - b.pdepth);
    check_internal(n <= INT64_MAX && n >= INT64_MIN, "PerfExp: overflow in addition");
    return pe_make(static_cast<std::int64_t>(n), d, p);
}

inline PerfExp pe_scale(const PerfExp& a, std::int64_t k, std::uint32_t p) {
    return pe_make(a.num * k, a.pdepth, p);
}

// Divide by p^k (take a p^k-th root of the monomial).
inline PerfExp pe_div_p(const PerfExp& a, std::uint32_t k, std::uint32_t p) {
    return pe_make(a.num, a.pdepth + k, p);
}

// Multiply by p^k (apply Frobenius k times).
inline PerfExp pe_mul_p(const PerfExp& a, std::uint32_t k, std::uint32_t p) {
    if (a.num == 0) return {0, 0};
    if (k >= a.pdepth) {
        __int128 n = static_cast<__int128>(a.num) * pe_pow128(p, k - a.pdepth);
        check_internal(n <= INT64_MAX && n >= INT64_MIN, "PerfExp: overflow in Frobenius");
        return {static_cast<std::int64_t>(n), 0};
    }
    return {a.num, a.pdepth - k};
}

// True iff the exponent is an integer divisible by p (the AS-reduction test).
inline bool pe_divisible_by_p(const PerfExp& a, std::uint32_t p) {
    return a.pdepth == 0 && a.num % static_cast<std::int64_t>(p) == 0;
}

inline std::string pe_to_string(const PerfExp& a, std::uint32_t p) {
    if (a.pdepth == 0) return std::to_string(a.num);
    std::int64_t den = 1;
    for (std::uint32_t i = 0; i < a.pdepth; ++i) den *= p;
    return "(" + std::to_string(a.num) + "/" + std::to_string(den) + ")";
}

}  // namespace wildram
