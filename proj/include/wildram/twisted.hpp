#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wildram/errors.hpp"
#include "wildram/perfpoly.hpp"

namespace wildram {

/// Element of the non-commutative ring A[F] with F*a = a^p*F, stored as the
/// coefficient sequence of sum a_n F^n.
class TwistedPoly {
public:
    explicit TwistedPoly(std::uint32_t p) : p_(p) {}

    static TwistedPoly from_coeffs(std::vector<PerfPoly> coeffs) {
        require(!coeffs.empty(), "TwistedPoly: empty coefficient list");
        TwistedPoly t(coeffs.front().p());
        t.coeffs_ = std::move(coeffs);
        t.trim();
        return t;
    }

    /// a * F^n
    static TwistedPoly term(const PerfPoly& a, std::uint32_t n) {
        TwistedPoly t(a.p());
        t.coeffs_.assign(n + 1, PerfPoly::zero(a.p()));
        t.coeffs_[n] = a;
        t.trim();
        return t;
    }

    static TwistedPoly F(std::uint32_t p) { return term(PerfPoly::constant(p, 1), 1); }
    static TwistedPoly one(std::uint32_t p) { return term(PerfPoly::constant(p, 1), 0); }

    std::uint32_t p() const { return p_; }
    const std::vector<PerfPoly>& coeffs() const { return coeffs_; }
    std::size_t degree_bound() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }

    PerfPoly coeff(std::size_t n) const {
        return n < coeffs_.size() ? coeffs_[n] : PerfPoly::zero(p_);
    }

    TwistedPoly operator+(const TwistedPoly& o) const {
        match(o);
        TwistedPoly r(p_);
        std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
        r.coeffs_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.coeffs_.push_back(coeff(i) + o.coeff(i));
        r.trim();
        return r;
    }

    TwistedPoly operator-() const {
        TwistedPoly r(p_);
        for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
        return r;
    }
    TwistedPoly operator-(const TwistedPoly& o) const { return *this + (-o); }

    /// (a F^m)(b F^n) = a * b^(p^m) F^(m+n), extended bilinearly.
    TwistedPoly operator*(const TwistedPoly& o) const {
        match(o);
        TwistedPoly r(p_);
        if (is_zero() || o.is_zero()) return r;
        r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, PerfPoly::zero(p_));
        for (std::size_t m = 0; m < coeffs_.size(); ++m) {
            if (coeffs_[m].is_zero()) continue;
            for (std::size_t n = 0; n < o.coeffs_.size(); ++n) {
                if (o.coeffs_[n].is_zero()) continue;
                r.coeffs_[m + n] = r.coeffs_[m + n] + coeffs_[m] * o.coeffs_[n].frobenius(static_cast<std::uint32_t>(m));
            }
        }
        r.trim();
        return r;
    }

    bool operator==(const TwistedPoly& o) const { return p_ == o.p_ && coeffs_ == o.coeffs_; }

    /// Evaluate as the additive operator q -> sum a_n q^(p^n).
    PerfPoly apply(const PerfPoly& q) const {
        PerfPoly r = PerfPoly::zero(p_);
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            r = r + coeffs_[n] * q.frobenius(static_cast<std::uint32_t>(n));
        return r;
    }

private:
    void match(const TwistedPoly& o) const { require(p_ == o.p_, "TwistedPoly: mixed characteristics"); }
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::uint32_t p_;
    std::vector<PerfPoly> coeffs_;
};

inline TwistedPoly twisted_mul(const TwistedPoly& a, const TwistedPoly& b) { return a * b; }

/// Image in A[F]/(F-1)A[F], identified with the additive group of the
/// perfection: a*F^n maps to the p^n-th root of a. Additive, and kills the
/// left ideal (F-1)A[F].
inline PerfPoly normal_form_mod_F_minus_1(const TwistedPoly& t) {
    PerfPoly r = PerfPoly::zero(t.p());
    for (std::size_t n = 0; n < t.coeffs().size(); ++n)
        r = r + t.coeffs()[n].pth_root(static_cast<std::uint32_t>(n));
    return r;
}

/// Characters of (Z/p)^k are exponent vectors mod p, not all zero.
using CharacterVec = std::vector<std::uint32_t>;

/// Lemma-style injectivity test for the dual map: the extension has connected
/// fibers iff every nonzero character maps to a nonzero linear form. The map
/// must be additive: F_{chi+chi'} = F_chi + F_{chi'} whenever defined.
inline bool dual_injectivity_test(std::uint32_t p, std::uint32_t k,
                                  const std::map<CharacterVec, PerfPoly>& forms) {
    std::vector<CharacterVec> all;
    CharacterVec cur(k, 0);
    // enumerate (Z/p)^k \ {0}
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < k; ++i) total *= p;
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < k; ++i) {
            cur[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        all.push_back(cur);
    }
    for (const auto& chi : all)
        require(forms.count(chi), "dual_injectivity_test: missing character");
    auto add = [&](const CharacterVec& a, const CharacterVec& b) {
        CharacterVec s(k);
        for (std::uint32_t i = 0; i < k; ++i) s[i] = (a[i] + b[i]) % p;
        return s;
    };
    bool zero_sum_seen;
    for (const auto& a : all) {
        for (const auto& b : all) {
            CharacterVec s = add(a, b);
            zero_sum_seen = true;
            for (auto v : s) zero_sum_seen = zero_sum_seen && v == 0;
            if (zero_sum_seen) continue;
            require(forms.at(s) == forms.at(a) + forms.at(b),
                    "dual_injectivity_test: incompatible additivity of the input map");
        }
    }
    for (const auto& chi : all)
        if (forms.at(chi).is_zero()) return false;
    return true;
}

}  // namespace wildram
