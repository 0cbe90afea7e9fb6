#include "retractlab/absorption.hpp"

#include <algorithm>

#include "retractlab/retraction.hpp"

namespace retractlab {

namespace {

// Embedding search in the style of the retraction search: assign images of
// K's elements along a linear extension, checking meets against earlier
// elements and joins once the joining element's turn comes. Injectivity and
// the Γ filter prune as soon as they apply.
struct EmbeddingSearch {
    const Lattice& K;
    const Lattice& L;
    GammaKind gamma;
    int gamma_y;
    std::vector<std::vector<std::pair<int, int>>> join_pairs;
    std::vector<int> img;
    DynBitset used;
    std::vector<std::vector<int>>& out;

    EmbeddingSearch(const Lattice& K_, const Lattice& L_, GammaKind g, int gy,
                    std::vector<std::vector<int>>& out_)
        : K(K_), L(L_), gamma(g), gamma_y(gy), used(L_.n), out(out_) {
        join_pairs.resize(K.n);
        for (int q = 0; q < K.n; ++q)
            for (int r = q; r < K.n; ++r) {
                int eq = K.linext[q], er = K.linext[r];
                int v = K.rank[K.join(eq, er)];
                if (v > r) join_pairs[v].emplace_back(eq, er);
            }
        img.assign(K.n, -1);
    }

    bool candidate_ok(int p, int e, int c) const {
        if (used.test(c)) return false;
        if (gamma == GammaKind::image_is_narrows && e == gamma_y && !is_narrows(L, c))
            return false;
        for (int q = 0; q < p; ++q) {
            int eq = K.linext[q];
            if (L.meet(img[eq], c) != img[K.meet(eq, e)]) return false;
        }
        for (auto [a, b] : join_pairs[p])
            if (L.join(img[a], img[b]) != c) return false;
        return true;
    }

    void run(int p) {
        if (p == K.n) {
            out.push_back(img);
            return;
        }
        int e = K.linext[p];
        for (int c = 0; c < L.n; ++c) {
            if (!candidate_ok(p, e, c)) continue;
            img[e] = c;
            used.set(c);
            run(p + 1);
            used.reset(c);
            img[e] = -1;
        }
    }
};

AbsorptionVerdict check_one(const AbsorptionProperty& prop, const DynBitset& S,
                            const std::vector<std::vector<int>>& maps) {
    AbsorptionVerdict v;
    for (const auto& g : maps) {
        bool bullets_in = true;
        prop.bullets.for_each([&](int b) {
            if (!S.test(g[b])) bullets_in = false;
        });
        if (!bullets_in) continue;
        int bad_star = -1;
        prop.stars.for_each([&](int s) {
            if (bad_star < 0 && !S.test(g[s])) bad_star = s;
        });
        if (bad_star >= 0) {
            v.holds = false;
            v.retract = S;
            v.embedding = g;
            v.star_element = bad_star;
            return v;
        }
    }
    return v;
}

}  // namespace

std::vector<std::vector<int>> embeddings(const Lattice& K, const Lattice& L, GammaKind gamma,
                                         int gamma_y, int cap) {
    require_cap(L.n, cap, "embeddings");
    if (gamma == GammaKind::image_is_narrows && (gamma_y < 0 || gamma_y >= K.n))
        throw IndexOutOfRange("embeddings: constraint element out of range");
    std::vector<std::vector<int>> out;
    if (K.n > L.n) return out;
    EmbeddingSearch search(K, L, gamma, gamma_y, out);
    search.run(0);
    std::sort(out.begin(), out.end());
    return out;
}

AbsorptionVerdict check_absorption(const Lattice& L, const AbsorptionProperty& prop, int cap) {
    auto maps = embeddings(prop.pattern, L, prop.gamma, prop.gamma_y, cap);
    if (maps.empty()) return {};
    for (const DynBitset& S : retracts(L, RetractsMode::bruteforce, cap)) {
        AbsorptionVerdict v = check_one(prop, S, maps);
        if (!v.holds) return v;
    }
    return {};
}

AbsorptionVerdict check_absorption(const Lattice& L, const AbsorptionProperty& prop,
                                   const DynBitset& S, int cap) {
    auto all = retracts(L, RetractsMode::bruteforce, cap);
    if (!std::binary_search(all.begin(), all.end(), S))
        throw NotARetract("check_absorption: the given subset is not a retract");
    auto maps = embeddings(prop.pattern, L, prop.gamma, prop.gamma_y, cap);
    return check_one(prop, S, maps);
}

AbsorptionProperty builtin_property(const std::string& name) {
    AbsorptionProperty prop;
    prop.name = name;
    if (name == "rc") {
        // four-element boolean pattern: a = bottom, b = top, c and d atoms;
        // a, b, c are bullets and the remaining atom is the star
        prop.pattern = lattice_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                                           {"a", "c", "d", "b"});
        prop.bullets = DynBitset::from_indices(4, {0, 1, 3});
        prop.stars = DynBitset::from_indices(4, {2});
        prop.gamma = GammaKind::none;
    } else if (name == "glusqap") {
        // glued sum of two squares; the middle element y must land on a
        // narrows, the four elements adjacent to y are the bullets
        prop.pattern = lattice_from_covers(
            7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}},
            {"0", "x", "b", "y", "c", "d", "1"});
        prop.bullets = DynBitset::from_indices(7, {1, 2, 4, 5});
        prop.stars = DynBitset::from_indices(7, {3});
        prop.gamma = GammaKind::image_is_narrows;
        prop.gamma_y = 3;
    } else {
        throw UnknownName("builtin_property: unknown name '" + name + "'");
    }
    return prop;
}

}  // namespace retractlab
