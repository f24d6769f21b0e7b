#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wildram/groupoid.hpp"

using namespace wildram;

namespace {
std::mt19937 rng(101010);

FiniteGroupoid cyclic_group(int k) {
    FiniteGroupoid G;
    G.n_objects = 1;
    G.n_morphisms = k;
    G.s.assign(k, 0);
    G.t.assign(k, 0);
    G.e = {0};
    G.iota.resize(k);
    G.mu.assign(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a) {
        G.iota[a] = (k - a) % k;
        for (int b = 0; b < k; ++b) G.mu[a][b] = (a + b) % k;
    }
    return G;
}

FiniteGroupoid s3_group() {
    // permutations of {0,1,2} as one-object groupoid; index = permutation rank
    std::vector<std::array<int, 3>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [&](const std::array<int, 3>& q) {
        for (int i = 0; i < 6; ++i)
            if (perms[i] == q) return i;
        throw internal_error("s3 table");
    };
    FiniteGroupoid G;
    G.n_objects = 1;
    G.n_morphisms = 6;
    G.s.assign(6, 0);
    G.t.assign(6, 0);
    G.e = {0};
    G.iota.resize(6);
    G.mu.assign(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a) {
        std::array<int, 3> inv{};
        for (int i = 0; i < 3; ++i) inv[perms[a][i]] = i;
        G.iota[a] = find(inv);
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> ab{};  // "a then b"
            for (int i = 0; i < 3; ++i) ab[i] = perms[b][perms[a][i]];
            G.mu[a][b] = find(ab);
        }
    }
    return G;
}

FiniteGroupoid pair_groupoid(int n) {
    FiniteGroupoid G;
    G.n_objects = n;
    G.n_morphisms = n * n;  // morphism i->j encoded as i*n + j
    G.s.resize(n * n);
    G.t.resize(n * n);
    G.e.resize(n);
    G.iota.resize(n * n);
    G.mu.assign(n * n, std::vector<int>(n * n, -1));
    for (int i = 0; i < n; ++i) {
        G.e[i] = i * n + i;
        for (int j = 0; j < n; ++j) {
            int m = i * n + j;
            G.s[m] = i;
            G.t[m] = j;
            G.iota[m] = j * n + i;
            for (int k = 0; k < n; ++k) G.mu[m][j * n + k] = i * n + k;
        }
    }
    return G;
}

FiniteGroupoid group_bundle(const std::vector<int>& ks) {
    FiniteGroupoid G;
    G.n_objects = static_cast<int>(ks.size());
    std::vector<int> offset(ks.size() + 1, 0);
    for (std::size_t i = 0; i < ks.size(); ++i) offset[i + 1] = offset[i] + ks[i];
    G.n_morphisms = offset.back();
    G.s.resize(G.n_morphisms);
    G.t.resize(G.n_morphisms);
    G.e.resize(G.n_objects);
    G.iota.resize(G.n_morphisms);
    G.mu.assign(G.n_morphisms, std::vector<int>(G.n_morphisms, -1));
    for (std::size_t x = 0; x < ks.size(); ++x) {
        G.e[x] = offset[x];
        for (int a = 0; a < ks[x]; ++a) {
            int m = offset[x] + a;
            G.s[m] = static_cast<int>(x);
            G.t[m] = static_cast<int>(x);
            G.iota[m] = offset[x] + (ks[x] - a) % ks[x];
            for (int b = 0; b < ks[x]; ++b) G.mu[m][offset[x] + b] = offset[x] + (a + b) % ks[x];
        }
    }
    return G;
}

FiniteGroupoid action_groupoid(int k, int m) {
    // Z/k acting on Z/m by x -> x+1 (requires m | k); morphism (g, x) = g*m + x
    FiniteGroupoid G;
    G.n_objects = m;
    G.n_morphisms = k * m;
    G.s.resize(k * m);
    G.t.resize(k * m);
    G.e.resize(m);
    G.iota.resize(k * m);
    G.mu.assign(k * m, std::vector<int>(k * m, -1));
    for (int x = 0; x < m; ++x) G.e[x] = 0 * m + x;
    for (int g = 0; g < k; ++g)
        for (int x = 0; x < m; ++x) {
            int mor = g * m + x;
            G.s[mor] = x;
            G.t[mor] = (x + g) % m;
            G.iota[mor] = ((k - g) % k) * m + (x + g) % m;
            for (int h = 0; h < k; ++h) G.mu[mor][h * m + (x + g) % m] = ((g + h) % k) * m + x;
        }
    return G;
}

FiniteGroupoid random_groupoid() {
    std::uniform_int_distribution<int> typ(0, 4), kk(2, 6), small(2, 4), nn(1, 4);
    switch (typ(rng)) {
        case 0: return cyclic_group(kk(rng));
        case 1: return s3_group();
        case 2: return pair_groupoid(1 + small(rng) % 4 == 0 ? 2 : small(rng));
        case 3: {
            int n = nn(rng);
            std::vector<int> ks;
            for (int i = 0; i < n; ++i) ks.push_back(small(rng));
            return group_bundle(ks);
        }
        default: {
            int m = (small(rng) % 2 == 0) ? 2 : 3;  // action of Z/k on m | k points
            int k = m * (1 + small(rng) % 2);
            return action_groupoid(k, m);
        }
    }
}

// exhaustive check of every stored table against the independent lmass
// telescoping closed form, all maps with m, n <= truncation
void require_closed_form_certificate(const Nerve& nv) {
    const int N = nv.O.truncation();
    for (int n = 0; n <= N; ++n) {
        for (int m = 0; m <= N; ++m) {
            for (const auto& f : all_maps(m, n)) {
                const auto& tab = nv.O.table(m, n, f);
                for (std::size_t q = 0; q < nv.O.level_size(n); ++q) {
                    const auto& chain = nv.chains[n][q];
                    int v0 = n == 0 ? chain[0] : nv.G.s[chain[0]];
                    std::vector<int> expect =
                        closed_form_image(nv.G, n == 0 ? std::vector<int>{} : chain, v0, f);
                    if (m == 0) {
                        int vert = detail_groupoid::chain_vertex(
                            nv.G, n == 0 ? std::vector<int>{} : chain, v0, f[0]);
                        REQUIRE(tab[q] == vert);
                    } else {
                        REQUIRE(tab[q] == nv.chain_index(m, expect));
                    }
                }
            }
        }
    }
}
}  // namespace

TEST_CASE("nerve of Z/2: level sizes 2^n and edge maps compute products") {
    Nerve nv = nerve(cyclic_group(2), 3);
    for (int n = 0; n <= 3; ++n) REQUIRE(nv.O.level_size(n) == (n == 0 ? 1u : 1u << n));
    // (ij)* of a chain computes x_{i+1} ... x_j
    const auto& tab = nv.O.table(1, 3, SetMap{0, 3});
    for (std::size_t q = 0; q < nv.O.level_size(3); ++q) {
        const auto& ch = nv.chains[3][q];
        int prod = (ch[0] + ch[1] + ch[2]) % 2;
        REQUIRE(nv.chains[1][static_cast<std::size_t>(tab[q])][0] == prod);
    }
}

TEST_CASE("nerve of a discrete groupoid: every level is S") {
    Nerve nv = nerve(group_bundle({1, 1, 1}), 4);
    for (int n = 0; n <= 4; ++n) REQUIRE(nv.O.level_size(n) == 3);
    REQUIRE(is_multiplicative(nv.O));
}

TEST_CASE("pair groupoid nerve reproduces the product oversimplicial object") {
    const int n_obj = 3, N = 3;
    Nerve nv = nerve(pair_groupoid(n_obj), N);
    TruncatedOversimplicialSet prod = product_oversimplicial(n_obj, {0, 0, 0}, N);
    // P_n = S^(n+1) on both sides
    for (int n = 0; n <= N; ++n) REQUIRE(nv.O.level_size(n) == prod.level_size(n));
    REQUIRE(is_multiplicative(prod));
    // explicit levelwise bijection: chain ((x0,x1),(x1,x2),...) <-> tuple (x0..xn)
    std::vector<std::vector<int>> to_prod(N + 1);
    for (int n = 0; n <= N; ++n) {
        to_prod[n].resize(nv.O.level_size(n));
        std::vector<std::vector<int>> tuples;
        std::vector<int> cur(n + 1, 0);
        for (;;) {
            tuples.push_back(cur);
            int i = 0;
            while (i <= n && cur[i] == n_obj - 1) cur[i++] = 0;
            if (i > n) break;
            ++cur[i];
        }
        std::map<std::vector<int>, int> tup_index;
        for (std::size_t i = 0; i < tuples.size(); ++i) tup_index.emplace(tuples[i], static_cast<int>(i));
        for (std::size_t q = 0; q < nv.O.level_size(n); ++q) {
            std::vector<int> tup;
            if (n == 0) {
                tup = {nv.chains[0][q][0]};
            } else {
                tup.push_back(nv.chains[n][q][0] / n_obj);
                for (int i = 0; i < n; ++i) tup.push_back(nv.chains[n][q][static_cast<std::size_t>(i)] % n_obj);
            }
            to_prod[n][q] = tup_index.at(tup);
        }
    }
    OversimplicialMorphism iso{to_prod};
    validate_morphism(nv.O, prod, iso);  // exhaustive table comparison through the bijection
}

TEST_CASE("is_multiplicative: nerves true, padded P_2 false") {
    Nerve nv = nerve(cyclic_group(3), 3);
    REQUIRE(is_multiplicative(nv.O));

    // pad P_2 with one extra element cloning element 0's outgoing values
    TruncatedOversimplicialSet padded(3);
    for (int n = 0; n <= 3; ++n) padded.set_level_size(n, nv.O.level_size(n) + (n == 2 ? 1 : 0));
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            for (const auto& f : all_maps(m, n)) {
                std::vector<int> tab = nv.O.table(m, n, f);
                if (n == 2) tab.push_back(tab[0]);
                padded.set_table(m, n, f, std::move(tab));
            }
    REQUIRE_FALSE(is_multiplicative(padded));
    REQUIRE_THROWS_AS(groupoid_from(padded), precondition_error);
}

TEST_CASE("groupoid_from: round trips, strict multiplicativity gives groups") {
    // strictly multiplicative input (the two maps P_1 -> P_0 equal) yields a group
    Nerve z3 = nerve(cyclic_group(3), 3);
    REQUIRE(is_strictly_multiplicative(z3.O));
    FiniteGroupoid back = groupoid_from(z3.O);
    REQUIRE(is_group(back));
    REQUIRE(back == z3.G);

    // pair groupoid round trip
    Nerve pg = nerve(pair_groupoid(3), 3);
    REQUIRE_FALSE(is_strictly_multiplicative(pg.O));
    REQUIRE(groupoid_from(pg.O) == pg.G);

    // a multiplicative object that was not built as a nerve
    TruncatedOversimplicialSet prod = product_oversimplicial(3, {0, 0, 0}, 3);
    FiniteGroupoid from_prod = groupoid_from(prod);
    validate_groupoid(from_prod);
    REQUIRE(from_prod.n_objects == 3);
    REQUIRE(from_prod.n_morphisms == 9);

    // nerve(groupoid_from(O)) is levelwise isomorphic to O via the chain map
    Nerve again = nerve(from_prod, 3);
    std::vector<std::vector<int>> level(4);
    for (int n = 0; n <= 3; ++n) {
        level[n].resize(prod.level_size(n));
        for (std::size_t q = 0; q < prod.level_size(n); ++q) {
            if (n == 0) {
                level[n][q] = static_cast<int>(q);
            } else {
                std::vector<int> chain;
                for (int i = 0; i + 1 <= n; ++i)
                    chain.push_back(prod.apply(1, n, SetMap{i, i + 1}, static_cast<int>(q)));
                level[n][q] = again.chain_index(n, chain);
            }
        }
    }
    OversimplicialMorphism iso{level};
    validate_morphism(prod, again.O, iso);
    for (int n = 0; n <= 3; ++n) {
        std::set<int> image(level[n].begin(), level[n].end());
        REQUIRE(image.size() == again.O.level_size(n));  // levelwise bijection
    }
}

TEST_CASE("criterion-9 suite: 100 random groupoids, exhaustive functoriality m,n <= 4") {
    int trips = 0;
    for (int i = 0; i < 100; ++i) {
        FiniteGroupoid G = random_groupoid();
        REQUIRE(G.n_objects <= 4);
        REQUIRE(G.n_morphisms <= 24);
        Nerve nv = nerve(G, 4);
        require_closed_form_certificate(nv);
        REQUIRE(is_multiplicative(nv.O));
        REQUIRE(groupoid_from(nv.O) == G);

        // lmass telescoping on random chains and random maps
        std::uniform_int_distribution<int> pickn(1, 4);
        for (int rep = 0; rep < 10; ++rep) {
            int n = pickn(rng);
            std::uniform_int_distribution<int> pickq(0, static_cast<int>(nv.O.level_size(n)) - 1);
            const auto& chain = nv.chains[n][static_cast<std::size_t>(pickq(rng))];
            int v0 = n == 0 ? chain[0] : G.s[chain[0]];
            std::uniform_int_distribution<int> pickm(0, 4), pickv(0, n);
            int m = pickm(rng);
            SetMap f(m + 1);
            for (int j = 0; j <= m; ++j) f[j] = pickv(rng);
            for (int ii = 0; ii <= m; ++ii)
                for (int jj = ii; jj <= m; ++jj) {
                    int lhs = detail_groupoid::chain_product(G, chain, v0, f[ii], f[jj]);
                    int acc = G.e[detail_groupoid::chain_vertex(G, chain, v0, f[ii])];
                    for (int k = ii; k < jj; ++k) {
                        int step = detail_groupoid::chain_product(G, chain, v0, f[k], f[k + 1]);
                        acc = G.mu[acc][step];
                        REQUIRE(acc >= 0);
                    }
                    REQUIRE(lhs == acc);
                }
        }
        ++trips;
    }
    REQUIRE(trips >= 100);
}

TEST_CASE("literal pairwise functoriality (g o f)* = f* o g* on small nerves") {
    for (const FiniteGroupoid& G : {cyclic_group(2), pair_groupoid(2)}) {
        Nerve nv = nerve(G, 4);
        for (int n = 0; n <= 4; ++n)
            for (int m = 0; m <= 4; ++m)
                for (int l = 0; l <= 4; ++l)
                    for (const auto& g : all_maps(m, n))
                        for (const auto& f : all_maps(l, m)) {
                            const auto& gf = nv.O.table(l, n, compose_maps(g, f));
                            const auto& gt = nv.O.table(m, n, g);
                            const auto& ft = nv.O.table(l, m, f);
                            for (std::size_t q = 0; q < nv.O.level_size(n); ++q)
                                if (gf[q] != ft[static_cast<std::size_t>(gt[q])]) REQUIRE(false);
                        }
        SUCCEED("all pairs verified");
    }
}

TEST_CASE("large |P| = 24 bundle: round trip and certificate at truncation 3") {
    FiniteGroupoid G = group_bundle({6, 6, 6, 6});
    REQUIRE(G.n_morphisms == 24);
    Nerve nv = nerve(G, 3);
    require_closed_form_certificate(nv);
    REQUIRE(is_multiplicative(nv.O));
    REQUIRE(groupoid_from(nv.O) == G);
}

TEST_CASE("lmgrpd: sub-nerve inclusions vs multiplicativity of the morphism") {
    // sub-groupoid inclusion: pair groupoid on {0,1} inside pair groupoid on {0,1,2}
    Nerve big = nerve(pair_groupoid(3), 3);
    Nerve sub = nerve(pair_groupoid(2), 3);
    std::vector<std::vector<int>> level(4);
    for (int n = 0; n <= 3; ++n) {
        level[n].resize(sub.O.level_size(n));
        for (std::size_t q = 0; q < sub.O.level_size(n); ++q) {
            if (n == 0) {
                level[n][q] = sub.chains[0][q][0];
            } else {
                std::vector<int> mapped;
                for (int a : sub.chains[n][q]) mapped.push_back((a / 2) * 3 + (a % 2));
                level[n][q] = big.chain_index(n, mapped);
            }
        }
    }
    OversimplicialMorphism incl{level};
    validate_morphism(sub.O, big.O, incl);
    REQUIRE(is_multiplicative(sub.O));
    REQUIRE(is_multiplicative_morphism(sub.O, big.O, incl));

    // a lawful non-multiplicative subobject: tuples with at most 2 distinct
    // coordinates inside the product object X^(n+1); its inclusion must be
    // non-multiplicative since the level-0 map is injective (lmgrpd)
    const int xs = 3, N = 2;
    TruncatedOversimplicialSet prod = product_oversimplicial(xs, {0, 0, 0}, N);
    TruncatedOversimplicialSet thin(N);
    std::vector<std::vector<int>> to_big(N + 1);
    std::vector<std::vector<std::vector<int>>> tuples(N + 1);
    std::vector<std::map<std::vector<int>, int>> idx(N + 1);
    for (int n = 0; n <= N; ++n) {
        std::vector<int> cur(n + 1, 0);
        for (;;) {
            std::set<int> distinct(cur.begin(), cur.end());
            if (distinct.size() <= 2) {
                idx[n].emplace(cur, static_cast<int>(tuples[n].size()));
                tuples[n].push_back(cur);
            }
            int i = 0;
            while (i <= n && cur[i] == xs - 1) cur[i++] = 0;
            if (i > n) break;
            ++cur[i];
        }
        thin.set_level_size(n, tuples[n].size());
    }
    for (int n = 0; n <= N; ++n) {
        to_big[n].resize(tuples[n].size());
        std::map<std::vector<int>, int> big_idx;
        {
            std::vector<int> cur(n + 1, 0);
            int count = 0;
            for (;;) {
                big_idx.emplace(cur, count++);
                int i = 0;
                while (i <= n && cur[i] == xs - 1) cur[i++] = 0;
                if (i > n) break;
                ++cur[i];
            }
        }
        for (std::size_t q = 0; q < tuples[n].size(); ++q) to_big[n][q] = big_idx.at(tuples[n][q]);
        for (int m = 0; m <= N; ++m)
            for (const auto& f : all_maps(m, n)) {
                std::vector<int> tab(tuples[n].size());
                for (std::size_t q = 0; q < tuples[n].size(); ++q) {
                    std::vector<int> im(m + 1);
                    for (int i = 0; i <= m; ++i) im[i] = tuples[n][q][static_cast<std::size_t>(f[i])];
                    tab[q] = idx[m].at(im);
                }
                thin.set_table(m, n, f, std::move(tab));
            }
    }
    OversimplicialMorphism inc2{to_big};
    validate_morphism(thin, prod, inc2);
    REQUIRE_FALSE(is_multiplicative(thin));
    REQUIRE_FALSE(is_multiplicative_morphism(thin, prod, inc2));
}

TEST_CASE("validate_groupoid rejects broken tables") {
    FiniteGroupoid G = cyclic_group(4);
    FiniteGroupoid bad = G;
    bad.iota[1] = 1;  // 1 + 1 != 0 in Z/4
    REQUIRE_THROWS_AS(validate_groupoid(bad), precondition_error);
    FiniteGroupoid bad2 = G;
    bad2.mu[1][1] = 3;  // breaks associativity/unit structure
    REQUIRE_THROWS_AS(validate_groupoid(bad2), precondition_error);
}
