#include "retractlab/lattice.hpp"

#include <algorithm>
#include <queue>

namespace retractlab {

bool Lattice::covers_pair(int lo, int hi) const {
    return std::binary_search(covers.begin(), covers.end(), std::make_pair(lo, hi));
}

int Lattice::label_index(const std::string& name) const {
    for (int i = 0; i < int(labels.size()); ++i)
        if (labels[i] == name) return i;
    return -1;
}

namespace {

// Kahn topological sort with index tie-break; empty result on a cycle.
std::vector<int> topo_order(int n, const std::vector<std::vector<int>>& up) {
    std::vector<int> indeg(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : up[u]) ++indeg[v];
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int u = 0; u < n; ++u)
        if (indeg[u] == 0) ready.push(u);
    std::vector<int> order;
    order.reserve(n);
    while (!ready.empty()) {
        int u = ready.top();
        ready.pop();
        order.push_back(u);
        for (int v : up[u])
            if (--indeg[v] == 0) ready.push(v);
    }
    if (int(order.size()) != n) order.clear();
    return order;
}

// Shared tail of both constructors: given finished below/above rows and a
// linear extension, fill meet/join tables (validating unique bounds), derive
// Hasse covers, and locate the bounds.
void finish_lattice(Lattice& L) {
    const int n = L.n;
    L.rank.assign(n, 0);
    for (int p = 0; p < n; ++p) L.rank[L.linext[p]] = p;

    L.meet_tbl.assign(size_t(n) * n, 0);
    L.join_tbl.assign(size_t(n) * n, 0);
    DynBitset tmp(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            tmp = L.below[a];
            tmp &= L.below[b];
            if (tmp.none()) throw NotALattice(a, b, true);
            // the highest-ranked common lower bound is maximal among them;
            // it is the meet iff it dominates the whole intersection
            int cand = -1, best = -1;
            tmp.for_each([&](int x) {
                if (L.rank[x] > best) {
                    best = L.rank[x];
                    cand = x;
                }
            });
            if (!tmp.is_subset_of(L.below[cand])) throw NotALattice(a, b, true);
            L.meet_tbl[size_t(a) * n + b] = L.meet_tbl[size_t(b) * n + a] = uint16_t(cand);

            tmp = L.above[a];
            tmp &= L.above[b];
            if (tmp.none()) throw NotALattice(a, b, false);
            cand = -1;
            best = n;
            tmp.for_each([&](int x) {
                if (L.rank[x] < best) {
                    best = L.rank[x];
                    cand = x;
                }
            });
            if (!tmp.is_subset_of(L.above[cand])) throw NotALattice(a, b, false);
            L.join_tbl[size_t(a) * n + b] = L.join_tbl[size_t(b) * n + a] = uint16_t(cand);
        }
    }

    L.bottom = L.linext.front();
    L.top = L.linext.back();

    // Hasse edges: a ≺ b iff the interval [a,b] is exactly {a,b}
    L.covers.clear();
    DynBitset strict(n), interval(n);
    for (int b = 0; b < n; ++b) {
        strict = L.below[b];
        strict.reset(b);
        strict.for_each([&](int a) {
            interval = L.below[b];
            interval &= L.above[a];
            if (interval.count() == 2) L.covers.emplace_back(a, b);
        });
    }
    std::sort(L.covers.begin(), L.covers.end());
}

}  // namespace

Lattice lattice_from_covers(int n, std::vector<std::pair<int, int>> covers,
                            std::vector<std::string> labels, int cap) {
    if (n < 1) throw NotAPoset("element count must be at least 1");
    require_cap(n, cap, "lattice_from_covers");
    for (auto [lo, hi] : covers) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n)
            throw IndexOutOfRange("cover index out of range");
        if (lo == hi) throw NotAPoset("self-loop in covers");
    }
    if (!labels.empty() && int(labels.size()) != n)
        throw IndexOutOfRange("labels must match element count");

    std::vector<std::vector<int>> up(n);
    for (auto [lo, hi] : covers) up[lo].push_back(hi);

    Lattice L;
    L.n = n;
    L.labels = std::move(labels);
    L.linext = topo_order(n, up);
    if (L.linext.empty()) throw NotAPoset("cover relation contains a cycle");

    std::vector<std::vector<int>> down(n);
    for (auto [lo, hi] : covers) down[hi].push_back(lo);
    L.below.assign(n, DynBitset(n));
    for (int i = 0; i < n; ++i) L.below[i].set(i);
    for (int u : L.linext)
        for (int lo : down[u]) L.below[u] |= L.below[lo];
    L.above.assign(n, DynBitset(n));
    for (int b = 0; b < n; ++b)
        L.below[b].for_each([&](int a) { L.above[a].set(b); });

    finish_lattice(L);
    return L;
}

Lattice lattice_from_order(int n, const std::vector<DynBitset>& below_rows,
                           std::vector<std::string> labels, int cap) {
    if (n < 1) throw NotAPoset("element count must be at least 1");
    require_cap(n, cap, "lattice_from_order");
    Lattice L;
    L.n = n;
    L.labels = std::move(labels);
    L.below = below_rows;
    for (int i = 0; i < n; ++i) {
        if (L.below[i].size() != n) throw IndexOutOfRange("order row has wrong width");
        if (!L.below[i].test(i)) throw NotAPoset("order is not reflexive");
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (L.below[b].test(a) && L.below[a].test(b))
                throw NotAPoset("order is not antisymmetric");
    // transitivity: j <= i implies down(j) ⊆ down(i)
    for (int i = 0; i < n; ++i) {
        bool ok = true;
        L.below[i].for_each([&](int j) {
            if (!L.below[j].is_subset_of(L.below[i])) ok = false;
        });
        if (!ok) throw NotAPoset("order is not transitive");
    }
    L.above.assign(n, DynBitset(n));
    for (int b = 0; b < n; ++b)
        L.below[b].for_each([&](int a) { L.above[a].set(b); });

    L.linext.resize(n);
    for (int i = 0; i < n; ++i) L.linext[i] = i;
    std::sort(L.linext.begin(), L.linext.end(), [&](int a, int b) {
        int ca = L.below[a].count(), cb = L.below[b].count();
        return ca != cb ? ca < cb : a < b;
    });

    finish_lattice(L);
    return L;
}

std::pair<int, int> meet_join(const Lattice& L, int a, int b) {
    if (a < 0 || a >= L.n || b < 0 || b >= L.n)
        throw IndexOutOfRange("meet_join: element index out of range");
    return {L.meet(a, b), L.join(a, b)};
}

StructuralFlags structural_flags(const Lattice& L) {
    const int n = L.n;
    StructuralFlags f{true, true, true};
    for (int a = 0; a < n && f.is_chain; ++a)
        for (int b = a + 1; b < n && f.is_chain; ++b)
            if (!L.comparable(a, b)) f.is_chain = false;

    for (int x = 0; x < n && f.is_distributive; ++x)
        for (int y = 0; y < n && f.is_distributive; ++y)
            for (int z = y; z < n; ++z)
                if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) {
                    f.is_distributive = false;
                    break;
                }

    // modular law restricted to x <= z
    for (int x = 0; x < n && f.is_modular; ++x)
        for (int z = 0; z < n && f.is_modular; ++z) {
            if (!L.leq(x, z)) continue;
            for (int y = 0; y < n; ++y)
                if (L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z)) {
                    f.is_modular = false;
                    break;
                }
        }
    return f;
}

Lattice direct_product(const Lattice& L1, const Lattice& L2, int cap) {
    const long long total = (long long)L1.n * L2.n;
    if (total > cap)
        throw SizeLimit("direct_product: " + std::to_string(total) + " elements exceeds cap " +
                        std::to_string(cap));
    const int n1 = L1.n, n2 = L2.n, n = int(total);
    auto id = [n2](int a1, int a2) { return a1 * n2 + a2; };

    Lattice L;
    L.n = n;
    L.coords.resize(n);
    L.factor_dims = {n1, n2};
    for (int a1 = 0; a1 < n1; ++a1)
        for (int a2 = 0; a2 < n2; ++a2) L.coords[id(a1, a2)] = {a1, a2};

    if (!L1.labels.empty() && !L2.labels.empty()) {
        L.labels.resize(n);
        for (int a1 = 0; a1 < n1; ++a1)
            for (int a2 = 0; a2 < n2; ++a2)
                L.labels[id(a1, a2)] = "(" + L1.labels[a1] + "," + L2.labels[a2] + ")";
    }

    L.below.assign(n, DynBitset(n));
    for (int a1 = 0; a1 < n1; ++a1)
        for (int a2 = 0; a2 < n2; ++a2) {
            DynBitset& row = L.below[id(a1, a2)];
            L1.below[a1].for_each([&](int b1) { row.or_shifted(L2.below[a2], b1 * n2); });
        }
    L.above.assign(n, DynBitset(n));
    for (int b = 0; b < n; ++b)
        L.below[b].for_each([&](int a) { L.above[a].set(b); });

    L.meet_tbl.resize(size_t(n) * n);
    L.join_tbl.resize(size_t(n) * n);
    for (int a = 0; a < n; ++a) {
        auto [a1, a2] = L.coords[a];
        for (int b = 0; b < n; ++b) {
            auto [b1, b2] = L.coords[b];
            L.meet_tbl[size_t(a) * n + b] = uint16_t(id(L1.meet(a1, b1), L2.meet(a2, b2)));
            L.join_tbl[size_t(a) * n + b] = uint16_t(id(L1.join(a1, b1), L2.join(a2, b2)));
        }
    }

    for (auto [lo, hi] : L1.covers)
        for (int a2 = 0; a2 < n2; ++a2) L.covers.emplace_back(id(lo, a2), id(hi, a2));
    for (auto [lo, hi] : L2.covers)
        for (int a1 = 0; a1 < n1; ++a1) L.covers.emplace_back(id(a1, lo), id(a1, hi));
    std::sort(L.covers.begin(), L.covers.end());

    L.linext.resize(n);
    for (int i = 0; i < n; ++i) L.linext[i] = i;
    std::sort(L.linext.begin(), L.linext.end(), [&](int a, int b) {
        int ra = L1.rank[L.coords[a].first] + L2.rank[L.coords[a].second];
        int rb = L1.rank[L.coords[b].first] + L2.rank[L.coords[b].second];
        return ra != rb ? ra < rb : a < b;
    });
    L.rank.assign(n, 0);
    for (int p = 0; p < n; ++p) L.rank[L.linext[p]] = p;

    L.bottom = id(L1.bottom, L2.bottom);
    L.top = id(L1.top, L2.top);
    return L;
}

Lattice dual(const Lattice& L) {
    std::vector<std::pair<int, int>> rev;
    rev.reserve(L.covers.size());
    for (auto [lo, hi] : L.covers) rev.emplace_back(hi, lo);
    return lattice_from_covers(L.n, std::move(rev), L.labels);
}

bool is_sublattice(const Lattice& L, const DynBitset& S) {
    if (S.none()) return false;
    auto idx = S.to_indices();
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j) {
            if (!S.test(L.meet(idx[i], idx[j]))) return false;
            if (!S.test(L.join(idx[i], idx[j]))) return false;
        }
    return true;
}

bool is_narrows(const Lattice& L, int x) {
    if (x < 0 || x >= L.n) throw IndexOutOfRange("is_narrows: element index out of range");
    if (x == L.bottom || x == L.top) return false;
    DynBitset cmp = L.below[x];
    cmp |= L.above[x];
    return cmp.count() == L.n;
}

int majority_term(const Lattice& L, int x, int y, int z) {
    if (x < 0 || x >= L.n || y < 0 || y >= L.n || z < 0 || z >= L.n)
        throw IndexOutOfRange("majority_term: element index out of range");
    return L.meet(L.meet(L.join(x, y), L.join(x, z)), L.join(y, z));
}

}  // namespace retractlab
