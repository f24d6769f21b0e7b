#pragma once

#include <cstdint>

#include "wildram/errors.hpp"

namespace wildram {

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// An element of the prime field F_p. The characteristic is carried along so
/// that mixed-characteristic arithmetic is rejected at the boundary.
class FpElem {
public:
    FpElem() = default;
    FpElem(std::int64_t value, std::uint32_t p) : p_(p) {
        require(is_prime(p), "FpElem: characteristic must be prime, got " + std::to_string(p));
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        value_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t value() const { return value_; }
    std::uint32_t p() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    FpElem operator+(FpElem o) const { return raw((value_ + o.check(p_)) % p_, p_); }
    FpElem operator-(FpElem o) const { return raw((value_ + p_ - o.check(p_)) % p_, p_); }
    FpElem operator-() const { return raw(value_ == 0 ? 0 : p_ - value_, p_); }
    FpElem operator*(FpElem o) const {
        return raw(static_cast<std::uint64_t>(value_) * o.check(p_) % p_, p_);
    }

    FpElem pow(std::int64_t e) const {
        if (value_ == 0) {
            require(e > 0, "FpElem: 0 raised to a non-positive power");
            return *this;
        }
        std::int64_t m = p_ - 1;  // the multiplicative group has order p-1
        std::int64_t r = e % m;
        if (r < 0) r += m;
        std::uint64_t base = value_, acc = 1;
        for (; r; r >>= 1, base = base * base % p_)
            if (r & 1) acc = acc * base % p_;
        return raw(acc, p_);
    }

    FpElem inv() const {
        require(value_ != 0, "FpElem: division by zero");
        return pow(static_cast<std::int64_t>(p_) - 2);
    }

    // Frobenius is the identity on F_p: value^p = value, so p-th roots are trivial.
    FpElem pth_root() const { return *this; }

    bool operator==(const FpElem& o) const { return value_ == o.value_ && p_ == o.p_; }
    bool operator!=(const FpElem& o) const { return !(*this == o); }

private:
    static FpElem raw(std::uint64_t v, std::uint32_t p) {
        FpElem e;
        e.value_ = static_cast<std::uint32_t>(v);
        e.p_ = p;
        return e;
    }
    std::uint32_t check(std::uint32_t p) const {
        require(p_ == p, "FpElem: mixed characteristics " + std::to_string(p_) + " and " + std::to_string(p));
        return value_;
    }

    std::uint32_t value_ = 0;
    std::uint32_t p_ = 2;
};

}  // namespace wildram
