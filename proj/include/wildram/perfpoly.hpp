#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wildram/errors.hpp"
#include "wildram/fp.hpp"
#include "wildram/perfexp.hpp"

namespace wildram {

/// A monomial: sorted (variable, exponent) pairs, zero exponents never stored.
using Monomial = std::vector<std::pair<std::string, PerfExp>>;

// Term order: lexicographic on variable names, then on exponents (larger
// exponent first). Canonical for printing and for the term map.
struct MonomialCmp {
    std::uint32_t p = 2;
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (i == a.size()) return false;  // a ran out: a has exp 0 on b's next var -> a later
            if (j == b.size()) return true;
            if (a[i].first != b[j].first) {
                // The side owning the smaller name has a nonzero exponent there.
                return a[i].first < b[j].first;
            }
            int c = pe_cmp(a[i].second, b[j].second, p);
            if (c != 0) return c > 0;  // larger exponent first
            ++i, ++j;
        }
        return false;
    }
};

/// Sparse multivariate polynomial over F_p with exponents in Z[1/p].
/// Models elements of the perfection F_p[vars]^{p^-inf}; negative integer
/// exponents are permitted so Laurent functions share the representation.
class PerfPoly {
public:
    using TermMap = std::map<Monomial, std::uint32_t, MonomialCmp>;

    explicit PerfPoly(std::uint32_t p) : p_(p), terms_(MonomialCmp{p}) {
        require(is_prime(p), "PerfPoly: characteristic must be prime");
    }

    static PerfPoly zero(std::uint32_t p) { return PerfPoly(p); }

    static PerfPoly constant(std::uint32_t p, std::int64_t c) {
        PerfPoly q(p);
        q.add_term(Monomial{}, FpElem(c, p).value());
        return q;
    }

    static PerfPoly variable(std::uint32_t p, const std::string& name, PerfExp e = {1, 0}) {
        PerfPoly q(p);
        Monomial m;
        if (!e.is_zero()) m.push_back({name, e});
        q.add_term(m, 1);
        return q;
    }

    static PerfPoly monomial(std::uint32_t p, std::int64_t c, const Monomial& m) {
        PerfPoly q(p);
        q.add_term(m, FpElem(c, p).value());
        return q;
    }

    std::uint32_t p() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    FpElem constant_value() const {
        require(is_constant(), "PerfPoly: not a constant");
        return terms_.empty() ? FpElem(0, p_) : FpElem(terms_.begin()->second, p_);
    }

    std::vector<std::string> vars() const {
        std::set<std::string> s;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) s.insert(v);
        return {s.begin(), s.end()};
    }

    void add_term(const Monomial& m_in, std::uint32_t c) {
        c %= p_;
        if (c == 0) return;
        Monomial m = m_in;  // canonicalize: sort by name, merge repeats, drop zeros
        std::sort(m.begin(), m.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Monomial norm;
        for (const auto& [v, e] : m) {
            if (!norm.empty() && norm.back().first == v) {
                norm.back().second = pe_add(norm.back().second, e, p_);
            } else {
                norm.push_back({v, e});
            }
        }
        norm.erase(std::remove_if(norm.begin(), norm.end(),
                                  [](const auto& ve) { return ve.second.is_zero(); }),
                   norm.end());
        auto it = terms_.find(norm);
        if (it == terms_.end()) {
            terms_.emplace(std::move(norm), c);
        } else {
            it->second = (it->second + c) % p_;
            if (it->second == 0) terms_.erase(it);
        }
    }

    PerfPoly operator+(const PerfPoly& o) const {
        match(o);
        PerfPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    PerfPoly operator-() const {
        PerfPoly r(p_);
        for (const auto& [m, c] : terms_) r.add_term(m, p_ - c);
        return r;
    }
    PerfPoly operator-(const PerfPoly& o) const { return *this + (-o); }

    PerfPoly operator*(const PerfPoly& o) const {
        match(o);
        PerfPoly r(p_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_)
                r.add_term(mono_mul(ma, mb), static_cast<std::uint32_t>(
                                                 static_cast<std::uint64_t>(ca) * cb % p_));
        return r;
    }

    PerfPoly pow(std::uint32_t e) const {
        PerfPoly r = constant(p_, 1);
        PerfPoly b = *this;
        for (; e; e >>= 1, b = b * b)
            if (e & 1) r = r * b;
        return r;
    }

    bool operator==(const PerfPoly& o) const { return p_ == o.p_ && terms_ == o.terms_; }
    bool operator!=(const PerfPoly& o) const { return !(*this == o); }

    /// Termwise p^k-th root; total since F_p coefficients are Frobenius-fixed.
    PerfPoly pth_root(std::uint32_t k) const {
        PerfPoly r(p_);
        for (const auto& [m, c] : terms_) {
            Monomial rm;
            rm.reserve(m.size());
            for (const auto& [v, e] : m) rm.push_back({v, pe_div_p(e, k, p_)});
            r.add_term(rm, c);  // c^(1/p^k) = c in F_p
        }
        return r;
    }

    /// k-fold Frobenius: q^(p^k), computed termwise.
    PerfPoly frobenius(std::uint32_t k) const {
        PerfPoly r(p_);
        for (const auto& [m, c] : terms_) {
            Monomial rm;
            rm.reserve(m.size());
            for (const auto& [v, e] : m) rm.push_back({v, pe_mul_p(e, k, p_)});
            r.add_term(rm, c);
        }
        return r;
    }

    PerfExp exponent_of(const Monomial& m, const std::string& var) const {
        for (const auto& [v, e] : m)
            if (v == var) return e;
        return {0, 0};
    }

    /// Largest exponent of `var` over all terms (0 for the zero polynomial).
    PerfExp max_exponent(const std::string& var) const {
        PerfExp best{0, 0};
        bool first = true;
        for (const auto& [m, c] : terms_) {
            PerfExp e = exponent_of(m, var);
            if (first || pe_cmp(e, best, p_) > 0) best = e, first = false;
        }
        return best;
    }
    PerfExp min_exponent(const std::string& var) const {
        PerfExp best{0, 0};
        bool first = true;
        for (const auto& [m, c] : terms_) {
            PerfExp e = exponent_of(m, var);
            if (first || pe_cmp(e, best, p_) < 0) best = e, first = false;
        }
        return best;
    }

    std::uint32_t max_pdepth() const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) d = std::max(d, e.pdepth);
        return d;
    }

    bool has_integer_exponents() const { return max_pdepth() == 0; }

    /// Substitute var := value. Requires all exponents of var to be
    /// nonnegative integers.
    PerfPoly substitute(const std::string& var, const PerfPoly& value) const {
        match(value);
        PerfPoly r(p_);
        for (const auto& [m, c] : terms_) {
            Monomial rest;
            std::int64_t e = 0;
            for (const auto& [v, ex] : m) {
                if (v == var) {
                    require(ex.is_integer() && ex.num >= 0,
                            "substitute: exponent of " + var + " must be a nonnegative integer");
                    e = ex.num;
                } else {
                    rest.push_back({v, ex});
                }
            }
            PerfPoly piece = monomial(p_, c, rest);
            if (e > 0) piece = piece * value.pow(static_cast<std::uint32_t>(e));
            r = r + piece;
        }
        return r;
    }

    /// Rename a variable (target name must not collide with an existing one).
    PerfPoly rename(const std::string& from, const std::string& to) const {
        PerfPoly r(p_);
        for (const auto& [m, c] : terms_) {
            Monomial rm;
            for (const auto& [v, e] : m) rm.push_back({v == from ? to : v, e});
            std::sort(rm.begin(), rm.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (std::size_t i = 1; i < rm.size(); ++i)
                check_internal(rm[i].first != rm[i - 1].first, "rename: variable collision");
            r.add_term(rm, c);
        }
        return r;
    }

    /// Evaluate one variable at a field element. Fractional exponents are
    /// fine: the p-th root is the identity on F_p. A pole at 0 (negative
    /// exponent with value 0) is a precondition error.
    PerfPoly evaluate(const std::string& var, FpElem value) const {
        require(value.p() == p_, "evaluate: characteristic mismatch");
        PerfPoly r(p_);
        for (const auto& [m, c] : terms_) {
            Monomial rest;
            FpElem factor(c, p_);
            bool zero = false;
            for (const auto& [v, ex] : m) {
                if (v != var) {
                    rest.push_back({v, ex});
                    continue;
                }
                if (value.is_zero()) {
                    require(ex.num > 0, "evaluate: pole of " + var + " at 0");
                    zero = true;
                } else {
                    factor = factor * value.pow(ex.num);  // x^(1/p^d) = x in F_p
                }
            }
            if (!zero) r.add_term(rest, factor.value());
        }
        return r;
    }

    /// The coefficient polynomial of var^1 taken among terms whose exponent
    /// of `var` is exactly 1.
    PerfPoly coefficient_of(const std::string& var) const {
        PerfPoly r(p_);
        for (const auto& [m, c] : terms_) {
            Monomial rest;
            bool hit = false;
            for (const auto& [v, e] : m) {
                if (v == var && pe_eq(e, {1, 0})) {
                    hit = true;
                } else {
                    rest.push_back({v, e});
                }
            }
            if (hit) r.add_term(rest, c);
        }
        return r;
    }

    /// Split off the part constant in all of `active`: returns {constant part,
    /// remainder with positive active support}.
    std::pair<PerfPoly, PerfPoly> split_active_constant(const std::set<std::string>& active) const {
        PerfPoly cst(p_), rest(p_);
        for (const auto& [m, c] : terms_) {
            bool touches = false;
            for (const auto& [v, e] : m)
                if (active.count(v)) touches = true;
            (touches ? rest : cst).add_term(m, c);
        }
        return {cst, rest};
    }

private:
    void match(const PerfPoly& o) const {
        require(p_ == o.p_, "PerfPoly: mixed characteristics");
    }

    Monomial mono_mul(const Monomial& a, const Monomial& b) const {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                r.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                r.push_back(b[j++]);
            } else {
                PerfExp e = pe_add(a[i].second, b[j].second, p_);
                if (!e.is_zero()) r.push_back({a[i].first, e});
                ++i, ++j;
            }
        }
        return r;
    }

    std::uint32_t p_;
    TermMap terms_;
};

inline PerfPoly pth_root(const PerfPoly& q, std::uint32_t k) { return q.pth_root(k); }

/// Normal form of psi under Artin-Schreier reduction in the active variables:
/// every term whose active exponents are all integers divisible by p (with
/// positive total active degree) is replaced by its p-th root, repeatedly.
/// Each monomial is rooted to its full depth in one pass; rooted monomials
/// are irreducible and merging never re-enables the rule, so the result is
/// the fixed point.
inline PerfPoly artin_schreier_reduce(const PerfPoly& psi, const std::set<std::string>& active) {
    const std::uint32_t p = psi.p();
    PerfPoly r(p);
    for (const auto& [m, c] : psi.terms()) {
        std::int64_t active_degree = 0;
        bool all_integer = true;
        std::uint32_t k = 40;
        for (const auto& [v, e] : m) {
            if (!active.count(v)) continue;
            if (!e.is_integer()) {
                all_integer = false;
                break;
            }
            active_degree += e.num;
            std::uint32_t d = 0;
            std::int64_t n = e.num;
            while (n % static_cast<std::int64_t>(p) == 0 && d < 40) {
                n /= static_cast<std::int64_t>(p);
                ++d;
            }
            k = std::min(k, d);
        }
        if (!all_integer || active_degree <= 0) k = 0;
        if (k == 0) {
            r.add_term(m, c);
        } else {
            Monomial rm;
            for (const auto& [v, e] : m) rm.push_back({v, pe_div_p(e, k, p)});
            r.add_term(rm, c);
        }
    }
    return r;
}

/// True iff every term with positive active degree is c * (one active
/// variable)^1. Precondition: psi is artin_schreier_reduce-normal.
inline bool is_fp_linear(const PerfPoly& psi, const std::set<std::string>& active) {
    for (const auto& [m, c] : psi.terms()) {
        int active_vars_seen = 0;
        bool linear = true;
        for (const auto& [v, e] : m) {
            if (!active.count(v)) continue;
            ++active_vars_seen;
            if (!pe_eq(e, {1, 0})) linear = false;
        }
        if (active_vars_seen == 0) continue;
        if (active_vars_seen > 1 || !linear) return false;
    }
    return true;
}

}  // namespace wildram
