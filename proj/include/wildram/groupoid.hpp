#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wildram/errors.hpp"

namespace wildram {

/// A groupoid as a 7-tuple of finite tables (P, S, s, t, e, mu, iota).
/// Objects are 0..n_objects-1, morphisms 0..n_morphisms-1; mu[a][b] is the
/// composite "a then b" (defined iff t[a] == s[b]), -1 otherwise.
struct FiniteGroupoid {
    int n_objects = 0;
    int n_morphisms = 0;
    std::vector<int> s, t;             // P -> S
    std::vector<int> e;                // S -> P
    std::vector<std::vector<int>> mu;  // P x_S P -> P
    std::vector<int> iota;             // P -> P

    bool operator==(const FiniteGroupoid&) const = default;
};

/// Pointwise check of the four commutative diagrams (associativity, unit,
/// left and right inverse) plus table well-formedness.
inline void validate_groupoid(const FiniteGroupoid& G) {
    const int S = G.n_objects, P = G.n_morphisms;
    require(S >= 1, "groupoid: need at least one object");
    require(static_cast<int>(G.s.size()) == P && static_cast<int>(G.t.size()) == P &&
                static_cast<int>(G.iota.size()) == P && static_cast<int>(G.e.size()) == S &&
                static_cast<int>(G.mu.size()) == P,
            "groupoid: table sizes");
    for (int a = 0; a < P; ++a) {
        require(G.s[a] >= 0 && G.s[a] < S && G.t[a] >= 0 && G.t[a] < S, "groupoid: s/t range");
        require(G.iota[a] >= 0 && G.iota[a] < P, "groupoid: iota range");
        require(static_cast<int>(G.mu[a].size()) == P, "groupoid: mu row size");
    }
    for (int x = 0; x < S; ++x) {
        require(G.e[x] >= 0 && G.e[x] < P, "groupoid: e range");
        require(G.s[G.e[x]] == x && G.t[G.e[x]] == x, "groupoid: e is not a unit section");
    }
    for (int a = 0; a < P; ++a) {
        for (int b = 0; b < P; ++b) {
            bool composable = G.t[a] == G.s[b];
            require((G.mu[a][b] >= 0) == composable, "groupoid: mu defined exactly on P x_S P");
            if (!composable) continue;
            int ab = G.mu[a][b];
            require(G.s[ab] == G.s[a] && G.t[ab] == G.t[b], "groupoid: mu endpoint equations");
        }
        require(G.mu[a][G.e[G.t[a]]] == a && G.mu[G.e[G.s[a]]][a] == a, "groupoid: unit diagrams");
        int ia = G.iota[a];
        require(G.s[ia] == G.t[a] && G.t[ia] == G.s[a], "groupoid: iota endpoints");
        require(G.mu[a][ia] == G.e[G.s[a]], "groupoid: right inverse diagram");
        require(G.mu[ia][a] == G.e[G.t[a]], "groupoid: left inverse diagram");
    }
    for (int a = 0; a < P; ++a)
        for (int b = 0; b < P; ++b) {
            if (G.t[a] != G.s[b]) continue;
            for (int c = 0; c < P; ++c) {
                if (G.t[b] != G.s[c]) continue;
                require(G.mu[G.mu[a][b]][c] == G.mu[a][G.mu[b][c]], "groupoid: associativity diagram");
            }
        }
}

inline bool is_group(const FiniteGroupoid& G) { return G.s == G.t; }

/// Maps f: [0,m] -> [0,n] are stored as their digit vectors (f(0),...,f(m)).
using SetMap = std::vector<int>;

inline std::size_t map_code(const SetMap& f, int n) {
    std::size_t code = 0, base = static_cast<std::size_t>(n) + 1;
    for (std::size_t i = f.size(); i-- > 0;) code = code * base + static_cast<std::size_t>(f[i]);
    return code;
}

inline SetMap compose_maps(const SetMap& g, const SetMap& f) {  // g o f
    SetMap r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = g[static_cast<std::size_t>(f[i])];
    return r;
}

/// A truncated oversimplicial set: finite levels P_0..P_N and the table of
/// f^*: P_n -> P_m for every map f: [0,m] -> [0,n] with m, n <= N.
class TruncatedOversimplicialSet {
public:
    explicit TruncatedOversimplicialSet(int truncation) : N_(truncation) {
        require(truncation >= 1, "oversimplicial set: truncation must be >= 1");
        sizes_.assign(N_ + 1, 0);
        tables_.assign(N_ + 1, {});
        for (int n = 0; n <= N_; ++n) tables_[n].assign(N_ + 1, {});
    }

    int truncation() const { return N_; }
    std::size_t level_size(int n) const { return sizes_[at(n)]; }
    void set_level_size(int n, std::size_t size) { sizes_[at(n)] = size; }

    void set_table(int m, int n, const SetMap& f, std::vector<int> table) {
        check_shape(m, n, f);
        check_internal(table.size() == sizes_[n], "oversimplicial set: table length");
        auto& slot = tables_[n][m];
        std::size_t count = 1, base = static_cast<std::size_t>(n) + 1;
        for (int i = 0; i <= m; ++i) count *= base;
        if (slot.empty()) slot.assign(count, {});
        slot[map_code(f, n)] = std::move(table);
    }

    const std::vector<int>& table(int m, int n, const SetMap& f) const {
        check_shape(m, n, f);
        const auto& slot = tables_[n][m];
        check_internal(!slot.empty() && !slot[map_code(f, n)].empty() ,
                       "oversimplicial set: missing structure map");
        return slot[map_code(f, n)];
    }

    int apply(int m, int n, const SetMap& f, int q) const { return table(m, n, f)[static_cast<std::size_t>(q)]; }

private:
    int at(int n) const {
        require(n >= 0 && n <= N_, "oversimplicial set: level out of truncation");
        return n;
    }
    void check_shape(int m, int n, const SetMap& f) const {
        at(m);
        at(n);
        require(static_cast<int>(f.size()) == m + 1, "oversimplicial set: map arity");
        for (int v : f) require(v >= 0 && v <= n, "oversimplicial set: map out of range");
    }

    int N_;
    std::vector<std::size_t> sizes_;
    // tables_[n][m][code] = the table of f^* for the map with that code
    std::vector<std::vector<std::vector<std::vector<int>>>> tables_;
};

/// Enumerate all maps [0,m] -> [0,n] in code order.
inline std::vector<SetMap> all_maps(int m, int n) {
    std::vector<SetMap> out;
    SetMap f(m + 1, 0);
    for (;;) {
        out.push_back(f);
        int i = 0;
        while (i <= m && f[i] == n) f[i++] = 0;
        if (i > m) break;
        ++f[i];
    }
    return out;
}

/// The nerve of a groupoid together with its chain-level bookkeeping, so
/// that elements of P_n can be read back as composable chains.
struct Nerve {
    FiniteGroupoid G;
    TruncatedOversimplicialSet O;
    std::vector<std::vector<std::vector<int>>> chains;  // chains[n][index] = (a_1..a_n); chains[0][x] = (x)

    int chain_index(int n, const std::vector<int>& chain) const {
        auto it = index[n].find(chain);
        check_internal(it != index[n].end(), "nerve: unknown chain");
        return it->second;
    }
    std::vector<std::map<std::vector<int>, int>> index;
};

namespace detail_groupoid {

// x_{ij} of Lemma-lmass type: the product a_{i+1} ... a_j for i <= j (empty
// product = unit at vertex i), and the inverse for i > j.
inline int chain_product(const FiniteGroupoid& G, const std::vector<int>& chain, int vertex0, int i,
                         int j) {
    auto vertex = [&](int k) { return k == 0 ? vertex0 : G.t[chain[static_cast<std::size_t>(k) - 1]]; };
    if (i == j) return G.e[vertex(i)];
    if (i > j) return G.iota[chain_product(G, chain, vertex0, j, i)];
    int acc = chain[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < j; ++k) {
        acc = G.mu[acc][chain[static_cast<std::size_t>(k)]];
        check_internal(acc >= 0, "nerve: chain not composable");
    }
    return acc;
}

inline int chain_vertex(const FiniteGroupoid& G, const std::vector<int>& chain, int vertex0, int k) {
    return k == 0 ? vertex0 : G.t[chain[static_cast<std::size_t>(k) - 1]];
}

}  // namespace detail_groupoid

/// Build the nerve P_n = P x_S ... x_S P up to the truncation, with every
/// structure map constructed by the inductive rules: vertices for m = 0,
/// mu-folds (and an inverse for descending edges) for m = 1, and tupling
/// for m >= 2.
inline Nerve nerve(const FiniteGroupoid& G, int truncation) {
    validate_groupoid(G);
    require(truncation >= 2, "nerve: truncation must be >= 2");
    Nerve nv{G, TruncatedOversimplicialSet(truncation), {}, {}};
    const int N = truncation;

    nv.chains.resize(N + 1);
    nv.index.resize(N + 1);
    for (int x = 0; x < G.n_objects; ++x) nv.chains[0].push_back({x});
    for (int n = 1; n <= N; ++n) {
        for (const auto& prefix : nv.chains[n - 1]) {
            for (int a = 0; a < G.n_morphisms; ++a) {
                int last_vertex = n == 1 ? prefix[0] : G.t[prefix.back()];
                if (G.s[a] != last_vertex) continue;
                std::vector<int> ch = n == 1 ? std::vector<int>{} : prefix;
                ch.push_back(a);
                nv.chains[n].push_back(std::move(ch));
            }
        }
    }
    for (int n = 0; n <= N; ++n) {
        nv.O.set_level_size(n, nv.chains[n].size());
        for (std::size_t i = 0; i < nv.chains[n].size(); ++i)
            nv.index[n].emplace(nv.chains[n][i], static_cast<int>(i));
    }

    auto vertex0_of = [&](int n, int q) {
        return n == 0 ? nv.chains[0][static_cast<std::size_t>(q)][0]
                      : G.s[nv.chains[n][static_cast<std::size_t>(q)][0]];
    };

    // m = 0 (vertices), then m = 1 (edge maps), then tupling upward
    for (int n = 0; n <= N; ++n) {
        for (const auto& f : all_maps(0, n)) {
            std::vector<int> tab(nv.chains[n].size());
            for (std::size_t q = 0; q < nv.chains[n].size(); ++q) {
                const auto& ch = nv.chains[n][q];
                int v0 = vertex0_of(n, static_cast<int>(q));
                tab[q] = detail_groupoid::chain_vertex(G, n == 0 ? std::vector<int>{} : ch, v0, f[0]);
            }
            nv.O.set_table(0, n, f, std::move(tab));
        }
        for (const auto& f : all_maps(1, n)) {
            std::vector<int> tab(nv.chains[n].size());
            for (std::size_t q = 0; q < nv.chains[n].size(); ++q) {
                const auto& ch = nv.chains[n][q];
                int v0 = vertex0_of(n, static_cast<int>(q));
                tab[q] = detail_groupoid::chain_product(G, n == 0 ? std::vector<int>{} : ch, v0, f[0], f[1]);
            }
            nv.O.set_table(1, n, f, std::move(tab));
        }
    }
    for (int m = 2; m <= N; ++m) {
        for (int n = 0; n <= N; ++n) {
            for (const auto& f : all_maps(m, n)) {
                SetMap g(f.begin(), f.end() - 1);
                SetMap h{f[m - 1], f[m]};
                const auto& gtab = nv.O.table(m - 1, n, g);
                const auto& htab = nv.O.table(1, n, h);
                std::vector<int> tab(nv.chains[n].size());
                for (std::size_t q = 0; q < nv.chains[n].size(); ++q) {
                    std::vector<int> chain = m - 1 == 0 ? std::vector<int>{}
                                                        : nv.chains[m - 1][static_cast<std::size_t>(gtab[q])];
                    if (m - 1 == 0) chain.clear();
                    chain.push_back(htab[q]);
                    tab[q] = nv.chain_index(m, chain);
                }
                nv.O.set_table(m, n, f, std::move(tab));
            }
        }
    }
    return nv;
}

/// Direct closed-form evaluation of f^* on a chain via the telescoping
/// products of Lemma-lmass type; the independent route against which the
/// inductively built tables are verified.
inline std::vector<int> closed_form_image(const FiniteGroupoid& G, const std::vector<int>& chain,
                                          int vertex0, const SetMap& f) {
    std::vector<int> out;
    for (std::size_t i = 1; i < f.size(); ++i)
        out.push_back(detail_groupoid::chain_product(G, chain, vertex0, f[i - 1], f[i]));
    return out;
}

/// Multiplicativity: for every additive cocartesian square with n = l + m
/// within the truncation, P_n -> P_m x_{P_0} P_l must be a bijection. The
/// representative square glues the last vertex of [0,m] to the first vertex
/// of [0,l]; all others differ from it by isomorphisms of [0,n].
inline bool is_multiplicative(const TruncatedOversimplicialSet& O) {
    const int N = O.truncation();
    for (int m = 0; m <= N; ++m) {
        for (int l = 0; m + l <= N; ++l) {
            int n = m + l;
            SetMap incl(m + 1), shift(l + 1);
            for (int i = 0; i <= m; ++i) incl[i] = i;
            for (int i = 0; i <= l; ++i) shift[i] = m + i;
            const auto& to_m = O.table(m, n, incl);
            const auto& to_l = O.table(l, n, shift);
            const auto& glue_m = O.table(0, m, SetMap{m});
            const auto& glue_l = O.table(0, l, SetMap{0});
            // count the fiber product and check injectivity of q -> (prefix, suffix)
            std::set<std::pair<int, int>> seen;
            for (std::size_t q = 0; q < O.level_size(n); ++q) {
                std::pair<int, int> im{to_m[q], to_l[q]};
                if (glue_m[static_cast<std::size_t>(im.first)] != glue_l[static_cast<std::size_t>(im.second)])
                    return false;
                if (!seen.insert(im).second) return false;  // not injective
            }
            std::size_t fiber = 0;
            for (std::size_t a = 0; a < O.level_size(m); ++a)
                for (std::size_t b = 0; b < O.level_size(l); ++b)
                    if (glue_m[a] == glue_l[b]) ++fiber;
            if (fiber != O.level_size(n)) return false;
        }
    }
    return true;
}

inline bool is_strictly_multiplicative(const TruncatedOversimplicialSet& O) {
    return is_multiplicative(O) && O.table(0, 1, SetMap{0}) == O.table(0, 1, SetMap{1});
}

/// Extract the groupoid (P_1, P_0, s, t, e, mu, iota) from a multiplicative
/// oversimplicial set; needs truncation >= 3 so that associativity can be
/// validated. mu comes from inverting P_2 -> P_1 x_{P_0} P_1.
inline FiniteGroupoid groupoid_from(const TruncatedOversimplicialSet& O) {
    require(O.truncation() >= 3, "groupoid_from: truncation must be >= 3");
    require(is_multiplicative(O), "groupoid_from: input is not multiplicative");
    FiniteGroupoid G;
    G.n_objects = static_cast<int>(O.level_size(0));
    G.n_morphisms = static_cast<int>(O.level_size(1));
    const auto& s = O.table(0, 1, SetMap{0});
    const auto& t = O.table(0, 1, SetMap{1});
    G.s = s;
    G.t = t;
    G.e = O.table(1, 0, SetMap{0, 0});
    G.iota = O.table(1, 1, SetMap{1, 0});
    const auto& pr01 = O.table(1, 2, SetMap{0, 1});
    const auto& pr12 = O.table(1, 2, SetMap{1, 2});
    const auto& pr02 = O.table(1, 2, SetMap{0, 2});
    G.mu.assign(G.n_morphisms, std::vector<int>(G.n_morphisms, -1));
    for (std::size_t q = 0; q < O.level_size(2); ++q) {
        int a = pr01[q], b = pr12[q];
        require(G.mu[a][b] == -1, "groupoid_from: P_2 -> P_1 x P_1 not injective");
        G.mu[a][b] = pr02[q];
    }
    validate_groupoid(G);
    return G;
}

/// A morphism of truncated oversimplicial sets: level maps commuting with
/// every structure map.
struct OversimplicialMorphism {
    std::vector<std::vector<int>> level;  // level[n]: Q_n -> P_n
};

inline void validate_morphism(const TruncatedOversimplicialSet& Q,
                              const TruncatedOversimplicialSet& P,
                              const OversimplicialMorphism& phi) {
    require(Q.truncation() == P.truncation(), "morphism: truncation mismatch");
    const int N = Q.truncation();
    require(static_cast<int>(phi.level.size()) == N + 1, "morphism: level count");
    for (int n = 0; n <= N; ++n)
        require(phi.level[n].size() == Q.level_size(n), "morphism: level size");
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= N; ++m)
            for (const auto& f : all_maps(m, n))
                for (std::size_t q = 0; q < Q.level_size(n); ++q)
                    require(phi.level[m][static_cast<std::size_t>(Q.apply(m, n, f, static_cast<int>(q)))] ==
                                P.apply(m, n, f, phi.level[n][q]),
                            "morphism: does not commute with structure maps");
}

/// Multiplicativity of a morphism (eqmnPQ): for each representative square,
/// Q_n -> (Q_m x_{P_m} P_n) x_{P_n} (Q_l x_{P_l} P_n) is a bijection.
inline bool is_multiplicative_morphism(const TruncatedOversimplicialSet& Q,
                                       const TruncatedOversimplicialSet& P,
                                       const OversimplicialMorphism& phi) {
    const int N = Q.truncation();
    for (int m = 0; m <= N; ++m) {
        for (int l = 0; m + l <= N; ++l) {
            int n = m + l;
            SetMap incl(m + 1), shift(l + 1);
            for (int i = 0; i <= m; ++i) incl[i] = i;
            for (int i = 0; i <= l; ++i) shift[i] = m + i;
            std::set<std::tuple<int, int, int>> image;
            for (std::size_t q = 0; q < Q.level_size(n); ++q) {
                std::tuple<int, int, int> key{Q.apply(m, n, incl, static_cast<int>(q)),
                                              Q.apply(l, n, shift, static_cast<int>(q)),
                                              phi.level[n][q]};
                if (!image.insert(key).second) return false;
            }
            std::size_t fiber = 0;
            for (std::size_t qm = 0; qm < Q.level_size(m); ++qm)
                for (std::size_t ql = 0; ql < Q.level_size(l); ++ql)
                    for (std::size_t pn = 0; pn < P.level_size(n); ++pn) {
                        if (phi.level[m][qm] != P.apply(m, n, incl, static_cast<int>(pn))) continue;
                        if (phi.level[l][ql] != P.apply(l, n, shift, static_cast<int>(pn))) continue;
                        ++fiber;
                    }
            if (fiber != Q.level_size(n)) return false;
        }
    }
    return true;
}

/// The multiplicative oversimplicial object X^{x(n+1)} of a set map X -> S
/// (all structure maps are coordinate reindexings).
inline TruncatedOversimplicialSet product_oversimplicial(int x_size, const std::vector<int>& to_s,
                                                         int truncation) {
    require(static_cast<int>(to_s.size()) == x_size, "product_oversimplicial: fiber map size");
    TruncatedOversimplicialSet O(truncation);
    const int N = truncation;
    // P_n = tuples (x_0..x_n) with equal image in S, encoded in base x_size
    std::vector<std::vector<std::vector<int>>> tuples(N + 1);
    std::vector<std::map<std::vector<int>, int>> index(N + 1);
    for (int n = 0; n <= N; ++n) {
        std::vector<int> cur(n + 1, 0);
        for (;;) {
            bool same = true;
            for (int i = 1; i <= n; ++i) same = same && to_s[cur[i]] == to_s[cur[0]];
            if (same) {
                index[n].emplace(cur, static_cast<int>(tuples[n].size()));
                tuples[n].push_back(cur);
            }
            int i = 0;
            while (i <= n && cur[i] == x_size - 1) cur[i++] = 0;
            if (i > n) break;
            ++cur[i];
        }
        O.set_level_size(n, tuples[n].size());
    }
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= N; ++m)
            for (const auto& f : all_maps(m, n)) {
                std::vector<int> tab(tuples[n].size());
                for (std::size_t q = 0; q < tuples[n].size(); ++q) {
                    std::vector<int> im(m + 1);
                    for (int i = 0; i <= m; ++i) im[i] = tuples[n][q][static_cast<std::size_t>(f[i])];
                    tab[q] = index[m].at(im);
                }
                O.set_table(m, n, f, std::move(tab));
            }
    return O;
}

}  // namespace wildram
