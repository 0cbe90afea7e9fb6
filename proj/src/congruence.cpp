#include "retractlab/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace retractlab {

namespace {

// Plain union-find over 0..n-1.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

Partition partition_of(UnionFind& uf) {
    std::vector<int> raw(uf.parent.size());
    for (int i = 0; i < int(raw.size()); ++i) raw[i] = uf.find(i);
    return Partition(std::move(raw));
}

}  // namespace

void Partition::canonicalize() {
    num_blocks = 0;
    int max_id = -1;
    for (int b : block_of) max_id = std::max(max_id, b);
    std::vector<int> remap(max_id + 1, -1);
    for (int& b : block_of) {
        if (remap[b] < 0) remap[b] = num_blocks++;
        b = remap[b];
    }
}

Partition Partition::singletons(int n) {
    Partition P;
    P.block_of.resize(n);
    std::iota(P.block_of.begin(), P.block_of.end(), 0);
    P.num_blocks = n;
    return P;
}

Partition Partition::one_block(int n) {
    Partition P;
    P.block_of.assign(n, 0);
    P.num_blocks = n ? 1 : 0;
    return P;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> raw(n, -1);
    int id = 0;
    for (const auto& blk : blocks) {
        for (int x : blk) {
            if (x < 0 || x >= n) throw IndexOutOfRange("partition block element out of range");
            if (raw[x] != -1) throw Error("partition blocks overlap");
            raw[x] = id;
        }
        ++id;
    }
    for (int x = 0; x < n; ++x)
        if (raw[x] == -1) throw Error("partition does not cover all elements");
    return Partition(std::move(raw));
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(num_blocks);
    for (int i = 0; i < size(); ++i) out[block_of[i]].push_back(i);
    return out;
}

Partition Partition::join_with(const Partition& o) const {
    UnionFind uf(size());
    for (int i = 1; i < size(); ++i)
        for (int j = 0; j < i; ++j)
            if (same_block(i, j) || o.same_block(i, j)) uf.unite(i, j);
    return partition_of(uf);
}

Partition Partition::meet_with(const Partition& o) const {
    std::vector<int> raw(size());
    for (int i = 0; i < size(); ++i) raw[i] = block_of[i] * (o.num_blocks + 1) + o.block_of[i];
    return Partition(std::move(raw));
}

bool Partition::refines(const Partition& o) const {
    std::vector<int> img(num_blocks, -1);
    for (int i = 0; i < size(); ++i) {
        int b = block_of[i];
        if (img[b] == -1) img[b] = o.block_of[i];
        else if (img[b] != o.block_of[i]) return false;
    }
    return true;
}

Relation Relation::full(int n) {
    Relation R(n);
    R.bits.set_all();
    return R;
}

Relation Relation::of_partition(const Partition& P) {
    Relation R(P.size());
    for (int a = 0; a < P.size(); ++a)
        for (int b = 0; b < P.size(); ++b)
            if (P.same_block(a, b)) R.set(a, b);
    return R;
}

Relation Relation::order_of(const Lattice& L) {
    Relation R(L.n);
    for (int a = 0; a < L.n; ++a)
        for (int b = 0; b < L.n; ++b)
            if (L.leq(a, b)) R.set(a, b);
    return R;
}

bool Relation::is_reflexive() const {
    for (int i = 0; i < n; ++i)
        if (!test(i, i)) return false;
    return true;
}

bool Relation::is_symmetric() const {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (test(a, b) != test(b, a)) return false;
    return true;
}

bool Relation::is_transitive() const {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!test(a, b)) continue;
            for (int c = 0; c < n; ++c)
                if (test(b, c) && !test(a, c)) return false;
        }
    return true;
}

Partition Relation::to_partition() const {
    UnionFind uf(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (test(a, b)) uf.unite(a, b);
    return partition_of(uf);
}

bool is_congruence(const Lattice& L, const Partition& P) {
    if (P.size() != L.n) return false;
    for (int x = 0; x < L.n; ++x)
        for (int y = x + 1; y < L.n; ++y) {
            if (!P.same_block(x, y)) continue;
            for (int z = 0; z < L.n; ++z) {
                if (!P.same_block(L.meet(x, z), L.meet(y, z))) return false;
                if (!P.same_block(L.join(x, z), L.join(y, z))) return false;
            }
        }
    return true;
}

namespace {

// Congruence-generation closure: merge the seed pairs, then keep merging
// translated pairs (u∧z, v∧z), (u∨z, v∨z) until stable. Processing one
// witness pair per merge suffices because earlier closure plus transitivity
// covers the rest of the two blocks.
Partition congruence_closure(const Lattice& L,
                             const std::vector<std::pair<int, int>>& seeds) {
    UnionFind uf(L.n);
    std::vector<std::pair<int, int>> work;
    for (auto [a, b] : seeds)
        if (uf.unite(a, b)) work.emplace_back(a, b);
    while (!work.empty()) {
        auto [u, v] = work.back();
        work.pop_back();
        for (int z = 0; z < L.n; ++z) {
            int mu = L.meet(u, z), mv = L.meet(v, z);
            if (uf.unite(mu, mv)) work.emplace_back(mu, mv);
            int ju = L.join(u, z), jv = L.join(v, z);
            if (uf.unite(ju, jv)) work.emplace_back(ju, jv);
        }
    }
    return partition_of(uf);
}

}  // namespace

Partition principal_congruence(const Lattice& L, int a, int b) {
    if (a < 0 || a >= L.n || b < 0 || b >= L.n)
        throw IndexOutOfRange("principal_congruence: element index out of range");
    return congruence_closure(L, {{a, b}});
}

std::vector<Partition> all_congruences(const Lattice& L, int cap) {
    require_cap(L.n, cap, "all_congruences");
    std::set<Partition> found;
    found.insert(Partition::singletons(L.n));
    for (int a = 0; a < L.n; ++a)
        for (int b = a + 1; b < L.n; ++b) found.insert(principal_congruence(L, a, b));

    // close under binary join; every congruence is a join of principals
    std::vector<Partition> list(found.begin(), found.end());
    for (size_t i = 0; i < list.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            Partition jn = list[i].join_with(list[j]);
            if (found.insert(jn).second) list.push_back(std::move(jn));
        }
    return {found.begin(), found.end()};
}

Lattice congruence_lattice(const Lattice& L, int cap) {
    auto con = all_congruences(L, cap);
    const int k = int(con.size());
    std::vector<DynBitset> below(k, DynBitset(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (con[i].refines(con[j])) below[j].set(i);
    return lattice_from_order(k, below);
}

bool is_compatible_quasiorder(const Lattice& L, const Relation& R) {
    if (R.n != L.n) return false;
    if (!R.is_reflexive() || !R.is_transitive()) return false;
    for (int a = 0; a < L.n; ++a)
        for (int b = 0; b < L.n; ++b) {
            if (!R.test(a, b)) continue;
            for (int z = 0; z < L.n; ++z) {
                if (!R.test(L.meet(a, z), L.meet(b, z))) return false;
                if (!R.test(L.join(a, z), L.join(b, z))) return false;
            }
        }
    return true;
}

namespace {

// Closure of `R` under reflexivity, transitivity, and the unary lattice
// translations. With reflexivity and transitivity present, closure under
// the unary translations implies full (binary) compatibility.
// Returns false when a pair from `forbidden` gets forced in.
bool quasiorder_closure(const Lattice& L, Relation& R, const DynBitset* forbidden) {
    const int n = L.n;
    std::vector<std::pair<int, int>> work;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (R.test(a, b) && a != b) work.emplace_back(a, b);
    auto add = [&](int a, int b) {
        if (R.test(a, b)) return true;
        if (forbidden && forbidden->test(a * n + b)) return false;
        R.set(a, b);
        work.emplace_back(a, b);
        return true;
    };
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        for (int z = 0; z < n; ++z) {
            if (!add(L.meet(a, z), L.meet(b, z))) return false;
            if (!add(L.join(a, z), L.join(b, z))) return false;
        }
        for (int c = 0; c < n; ++c) {
            if (R.test(b, c) && !add(a, c)) return false;
            if (R.test(c, a) && !add(c, b)) return false;
        }
    }
    return true;
}

void quasiorder_dfs(const Lattice& L, const Relation& closed, DynBitset forbidden,
                    std::vector<Relation>& out) {
    const int n = L.n;
    int pick = -1;
    for (int p = 0; p < n * n && pick < 0; ++p)
        if (!closed.bits.test(p) && !forbidden.test(p)) pick = p;
    if (pick < 0) {
        out.push_back(closed);
        return;
    }
    // branch 1: the pair stays out
    {
        DynBitset f = forbidden;
        f.set(pick);
        quasiorder_dfs(L, closed, std::move(f), out);
    }
    // branch 2: the pair goes in; propagate and prune on conflict
    {
        Relation r = closed;
        r.bits.set(pick);
        Relation grown = r;
        if (quasiorder_closure(L, grown, &forbidden))
            quasiorder_dfs(L, grown, std::move(forbidden), out);
    }
}

}  // namespace

std::vector<Relation> all_compatible_quasiorders(const Lattice& L, int cap) {
    require_cap(L.n, cap, "all_compatible_quasiorders");
    Relation delta(L.n);
    std::vector<Relation> out;
    quasiorder_dfs(L, delta, DynBitset(L.n * L.n), out);
    std::sort(out.begin(), out.end());
    return out;
}

Relation product_relation(const Relation& r1, const Relation& r2) {
    const int n1 = r1.n, n2 = r2.n;
    Relation R(n1 * n2);
    for (int a1 = 0; a1 < n1; ++a1)
        for (int b1 = 0; b1 < n1; ++b1) {
            if (!r1.test(a1, b1)) continue;
            for (int a2 = 0; a2 < n2; ++a2)
                for (int b2 = 0; b2 < n2; ++b2)
                    if (r2.test(a2, b2)) R.set(a1 * n2 + a2, b1 * n2 + b2);
        }
    return R;
}

Partition product_congruence(const Partition& p1, const Partition& p2) {
    const int n1 = p1.size(), n2 = p2.size();
    std::vector<int> raw(n1 * n2);
    for (int a1 = 0; a1 < n1; ++a1)
        for (int a2 = 0; a2 < n2; ++a2)
            raw[a1 * n2 + a2] = p1.block_of[a1] * p2.num_blocks + p2.block_of[a2];
    return Partition(std::move(raw));
}

std::pair<Relation, Relation> factorize_product_relation(const Lattice& prod,
                                                         const Relation& rho) {
    auto [n1, n2] = prod.factor_dims;
    if (n1 <= 0 || n2 <= 0 || prod.coords.empty())
        throw NotFactorizable("lattice was not built as a direct product");
    if (rho.n != prod.n) throw NotFactorizable("relation size does not match the product");

    Relation rho1(n1), rho2(n2);
    for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n1; ++y)
            for (int z = 0; z < n2; ++z)
                if (rho.test(x * n2 + z, y * n2 + z)) {
                    rho1.set(x, y);
                    break;
                }
    for (int x = 0; x < n2; ++x)
        for (int y = 0; y < n2; ++y)
            for (int z = 0; z < n1; ++z)
                if (rho.test(z * n2 + x, z * n2 + y)) {
                    rho2.set(x, y);
                    break;
                }

    if (product_relation(rho1, rho2) != rho)
        throw NotFactorizable("relation is not a compatible quasiorder of the product");
    return {rho1, rho2};
}

std::pair<Partition, Partition> factorize_product_relation(const Lattice& prod,
                                                           const Partition& theta) {
    auto [r1, r2] = factorize_product_relation(prod, Relation::of_partition(theta));
    return {r1.to_partition(), r2.to_partition()};
}

}  // namespace retractlab
