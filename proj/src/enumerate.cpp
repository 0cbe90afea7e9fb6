#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "retractlab/catalog.hpp"

namespace retractlab {

namespace {

// Canonical encoding of a finite poset given its down-set rows: refine an
// isomorphism-invariant element classification, then take the minimal
// order-matrix string over all orderings compatible with the classes.
std::string canonical_poset_form(int n, const std::vector<DynBitset>& below) {
    std::vector<DynBitset> above(n, DynBitset(n));
    for (int b = 0; b < n; ++b)
        below[b].for_each([&](int a) { above[a].set(b); });

    // Hasse neighbours for the refinement
    std::vector<std::vector<int>> lower(n), upper(n);
    for (int b = 0; b < n; ++b)
        below[b].for_each([&](int a) {
            if (a == b) return;
            DynBitset iv = below[b];
            iv &= above[a];
            if (iv.count() == 2) {
                lower[b].push_back(a);
                upper[a].push_back(b);
            }
        });

    std::vector<int> cls(n, 0);
    {
        std::map<std::pair<int, int>, int> ids;
        std::vector<std::pair<int, int>> key(n);
        for (int i = 0; i < n; ++i) key[i] = {below[i].count(), above[i].count()};
        for (int i = 0; i < n; ++i) ids.emplace(key[i], 0);
        int next = 0;
        for (auto& kv : ids) kv.second = next++;
        for (int i = 0; i < n; ++i) cls[i] = ids[key[i]];
    }
    for (int round = 0; round < 3; ++round) {
        std::vector<std::vector<int>> key(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> lo, hi;
            for (int j : lower[i]) lo.push_back(cls[j]);
            for (int j : upper[i]) hi.push_back(cls[j]);
            std::sort(lo.begin(), lo.end());
            std::sort(hi.begin(), hi.end());
            key[i].push_back(cls[i]);
            key[i].push_back(-1);
            key[i].insert(key[i].end(), lo.begin(), lo.end());
            key[i].push_back(-2);
            key[i].insert(key[i].end(), hi.begin(), hi.end());
        }
        std::map<std::vector<int>, int> ids;
        for (int i = 0; i < n; ++i) ids.emplace(key[i], 0);
        int next = 0;
        for (auto& kv : ids) kv.second = next++;
        for (int i = 0; i < n; ++i) cls[i] = ids[key[i]];
    }

    // cells in class order; orderings = products of in-cell permutations
    std::vector<std::vector<int>> cells;
    for (int c = 0;; ++c) {
        std::vector<int> cell;
        for (int i = 0; i < n; ++i)
            if (cls[i] == c) cell.push_back(i);
        if (cell.empty()) break;
        cells.push_back(std::move(cell));
    }

    std::string best;
    std::vector<int> perm;
    std::string enc(size_t(n) * n, '0');
    std::function<void(size_t)> rec = [&](size_t ci) {
        if (ci == cells.size()) {
            std::fill(enc.begin(), enc.end(), '0');
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (below[perm[j]].test(perm[i])) enc[size_t(i) * n + j] = '1';
            if (best.empty() || enc < best) best = enc;
            return;
        }
        std::vector<int> cell = cells[ci];
        std::sort(cell.begin(), cell.end());
        do {
            size_t mark = perm.size();
            perm.insert(perm.end(), cell.begin(), cell.end());
            rec(ci + 1);
            perm.resize(mark);
        } while (std::next_permutation(cell.begin(), cell.end()));
    };
    rec(0);
    return std::to_string(n) + ":" + best;
}

struct SemiLattice {
    int n = 0;
    std::vector<DynBitset> below;
};

// Valid down-sets for a new maximal element: D must be down-closed and for
// every existing a the set D ∩ ↓a needs a greatest member (that member
// becomes x ∧ a).
std::vector<DynBitset> extension_downsets(const SemiLattice& S) {
    std::vector<DynBitset> out;
    const int n = S.n;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
        DynBitset D(n);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) D.set(i);
        bool ok = true;
        D.for_each([&](int d) {
            if (!S.below[d].is_subset_of(D)) ok = false;
        });
        if (!ok) continue;
        for (int a = 0; a < n && ok; ++a) {
            DynBitset inter = D;
            inter &= S.below[a];
            if (inter.none()) {
                ok = false;
                break;
            }
            bool has_max = false;
            inter.for_each([&](int x) {
                if (!has_max && inter.is_subset_of(S.below[x])) has_max = true;
            });
            ok = has_max;
        }
        if (ok) out.push_back(std::move(D));
    }
    return out;
}

SemiLattice extend(const SemiLattice& S, const DynBitset& D) {
    SemiLattice T;
    T.n = S.n + 1;
    T.below.assign(T.n, DynBitset(T.n));
    for (int i = 0; i < S.n; ++i)
        S.below[i].for_each([&](int j) { T.below[i].set(j); });
    D.for_each([&](int j) { T.below[S.n].set(j); });
    T.below[S.n].set(S.n);
    return T;
}

std::vector<SemiLattice> semilattices_of_size(int k) {
    std::vector<SemiLattice> level;
    {
        SemiLattice one;
        one.n = 1;
        one.below.assign(1, DynBitset(1));
        one.below[0].set(0);
        level.push_back(std::move(one));
    }
    for (int size = 2; size <= k; ++size) {
        std::map<std::string, SemiLattice> next;
        for (const SemiLattice& S : level)
            for (const DynBitset& D : extension_downsets(S)) {
                SemiLattice T = extend(S, D);
                std::string form = canonical_poset_form(T.n, T.below);
                next.emplace(std::move(form), std::move(T));
            }
        level.clear();
        for (auto& kv : next) level.push_back(std::move(kv.second));
    }
    return level;
}

}  // namespace

std::string canonical_form(const Lattice& L) {
    return canonical_poset_form(L.n, L.below);
}

bool are_isomorphic(const Lattice& A, const Lattice& B) {
    return A.n == B.n && canonical_form(A) == canonical_form(B);
}

std::vector<Lattice> enumerate_lattices(int n, int cap) {
    require_cap(n, cap, "enumerate_lattices");
    if (n < 1) throw InvalidShape("enumerate_lattices: n must be >= 1");
    std::vector<Lattice> out;
    if (n == 1) {
        out.push_back(lattice_from_covers(1, {}));
        return out;
    }
    // an n-element lattice minus its top is an (n-1)-element meet-semilattice
    for (const SemiLattice& S : semilattices_of_size(n - 1)) {
        std::vector<std::pair<int, int>> covers;
        for (int b = 0; b < S.n; ++b)
            S.below[b].for_each([&](int a) {
                if (a == b) return;
                bool cover = true;
                for (int z = 0; z < S.n && cover; ++z)
                    if (z != a && z != b && S.below[z].test(a) && S.below[b].test(z))
                        cover = false;
                if (cover) covers.emplace_back(a, b);
            });
        // adjoin the top above all maximal elements
        for (int i = 0; i < S.n; ++i) {
            bool maximal = true;
            for (int j = 0; j < S.n && maximal; ++j)
                if (j != i && S.below[j].test(i)) maximal = false;
            if (maximal) covers.emplace_back(i, S.n);
        }
        out.push_back(lattice_from_covers(S.n + 1, std::move(covers)));
    }
    std::sort(out.begin(), out.end(), [](const Lattice& a, const Lattice& b) {
        return canonical_form(a) < canonical_form(b);
    });
    return out;
}

}  // namespace retractlab
