#include "retractlab/retraction.hpp"

#include <algorithm>
#include <set>

namespace retractlab {

EndoMap EndoMap::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    return EndoMap(std::move(img));
}

EndoMap EndoMap::constant(int n, int value) {
    return EndoMap(std::vector<int>(n, value));
}

DynBitset EndoMap::image() const {
    DynBitset S(size());
    for (int v : image_of) S.set(v);
    return S;
}

Partition EndoMap::kernel() const {
    std::vector<int> raw(size());
    for (int i = 0; i < size(); ++i) raw[i] = image_of[i];
    return Partition(std::move(raw));
}

bool is_retraction(const Lattice& L, const EndoMap& f) {
    if (f.size() != L.n) return false;
    for (int x = 0; x < L.n; ++x) {
        int fx = f(x);
        if (fx < 0 || fx >= L.n) return false;
        if (f(fx) != fx) return false;
    }
    for (int x = 0; x < L.n; ++x)
        for (int y = x + 1; y < L.n; ++y) {
            if (f(L.meet(x, y)) != L.meet(f(x), f(y))) return false;
            if (f(L.join(x, y)) != L.join(f(x), f(y))) return false;
        }
    return true;
}

namespace {

// Backtracking search for idempotent endomorphisms. Images are assigned
// along a linear extension. When position p gets image c, we check
//   f(e_q) ∧ c == f(e_q ∧ e_p) for every earlier q (the meet of two
//   assigned elements is always assigned), which subsumes monotonicity,
// and f(e_i) ∨ f(e_j) == c for every pair whose join is e_p. Idempotence
// is enforced by marking images as required fixed points.
struct RetractionSearch {
    const Lattice& L;
    std::vector<std::vector<std::pair<int, int>>> join_pairs;  // by position
    std::vector<int> img;        // by element, -1 unassigned
    std::vector<char> must_fix;  // by element
    std::vector<EndoMap>& out;

    RetractionSearch(const Lattice& L_, std::vector<EndoMap>& out_) : L(L_), out(out_) {
        const int n = L.n;
        join_pairs.resize(n);
        for (int q = 0; q < n; ++q)
            for (int r = q; r < n; ++r) {
                int eq = L.linext[q], er = L.linext[r];
                int v = L.rank[L.join(eq, er)];
                if (v > r) join_pairs[v].emplace_back(eq, er);
            }
        img.assign(n, -1);
        must_fix.assign(n, 0);
    }

    bool candidate_ok(int p, int e, int c) const {
        if (must_fix[e] && c != e) return false;
        if (img[c] != -1 && img[c] != c) return false;
        for (int q = 0; q < p; ++q) {
            int eq = L.linext[q];
            if (L.meet(img[eq], c) != img[L.meet(eq, e)]) return false;
        }
        for (auto [a, b] : join_pairs[p])
            if (L.join(img[a], img[b]) != c) return false;
        return true;
    }

    void run(int p) {
        const int n = L.n;
        if (p == n) {
            out.emplace_back(img);
            return;
        }
        int e = L.linext[p];
        for (int c = 0; c < n; ++c) {
            if (!candidate_ok(p, e, c)) continue;
            img[e] = c;
            bool fixed_added = false;
            if (c != e && !must_fix[c]) {
                must_fix[c] = 1;
                fixed_added = true;
            }
            run(p + 1);
            if (fixed_added) must_fix[c] = 0;
            img[e] = -1;
        }
    }
};

}  // namespace

std::vector<EndoMap> all_retractions(const Lattice& L, int cap) {
    require_cap(L.n, cap, "all_retractions");
    std::vector<EndoMap> out;
    RetractionSearch search(L, out);
    search.run(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// All non-empty subsets closed under meet and join; only usable for small n.
std::vector<DynBitset> all_sublattices(const Lattice& L) {
    const int n = L.n;
    std::vector<DynBitset> out;
    std::vector<int> members;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
        members.clear();
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) members.push_back(i);
        bool closed = true;
        for (size_t i = 0; i < members.size() && closed; ++i)
            for (size_t j = i + 1; j < members.size(); ++j) {
                if (!((mask >> L.meet(members[i], members[j])) & 1) ||
                    !((mask >> L.join(members[i], members[j])) & 1)) {
                    closed = false;
                    break;
                }
            }
        if (!closed) continue;
        DynBitset S(n);
        for (int i : members) S.set(i);
        out.push_back(std::move(S));
    }
    return out;
}

bool is_transversal(const Partition& theta, const DynBitset& S) {
    std::vector<int> hits(theta.num_blocks, 0);
    S.for_each([&](int x) { ++hits[theta.block_of[x]]; });
    for (int h : hits)
        if (h != 1) return false;
    return true;
}

}  // namespace

std::vector<DynBitset> retracts(const Lattice& L, RetractsMode mode, int cap) {
    require_cap(L.n, cap, "retracts");
    std::set<DynBitset> out;
    if (mode == RetractsMode::bruteforce) {
        for (const EndoMap& f : all_retractions(L, cap)) out.insert(f.image());
    } else {
        if (L.n > 62) throw SizeLimit("retracts: transversal mode needs n <= 62");
        auto cons = all_congruences(L, cap);
        for (const DynBitset& S : all_sublattices(L)) {
            for (const Partition& theta : cons) {
                if (theta.num_blocks != S.count()) continue;
                if (is_transversal(theta, S)) {
                    out.insert(S);
                    break;
                }
            }
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Partition> rcon(const Lattice& L, int cap) {
    require_cap(L.n, cap, "rcon");
    std::set<Partition> out;
    for (const EndoMap& f : all_retractions(L, cap)) out.insert(f.kernel());
    return {out.begin(), out.end()};
}

namespace {

// Transversal search with propagation: picking representative x for a block
// forces x∧y and x∨y to represent their own blocks for every representative
// y chosen so far.
struct TransversalSearch {
    const Lattice& L;
    const Partition& theta;
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_order;  // by increasing size
    std::vector<int> rep;          // by block, -1 unset
    std::vector<int> trail;

    TransversalSearch(const Lattice& L_, const Partition& t) : L(L_), theta(t) {
        blocks = theta.blocks();
        block_order.resize(blocks.size());
        for (size_t i = 0; i < blocks.size(); ++i) block_order[i] = int(i);
        std::stable_sort(block_order.begin(), block_order.end(),
                         [&](int a, int b) { return blocks[a].size() < blocks[b].size(); });
        rep.assign(blocks.size(), -1);
    }

    bool assign(int elem) {
        std::vector<int> work{elem};
        int b0 = theta.block_of[elem];
        if (rep[b0] != -1) return rep[b0] == elem;
        rep[b0] = elem;
        trail.push_back(b0);
        while (!work.empty()) {
            int x = work.back();
            work.pop_back();
            // propagate against every representative set so far
            for (size_t i = 0; i < rep.size(); ++i) {
                int y = rep[i];
                if (y == -1) continue;
                for (int z : {L.meet(x, y), L.join(x, y)}) {
                    int bz = theta.block_of[z];
                    if (rep[bz] == -1) {
                        rep[bz] = z;
                        trail.push_back(bz);
                        work.push_back(z);
                    } else if (rep[bz] != z) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            rep[trail.back()] = -1;
            trail.pop_back();
        }
    }

    bool search(size_t next) {
        while (next < block_order.size() && rep[block_order[next]] != -1) ++next;
        if (next == block_order.size()) return true;
        int b = block_order[next];
        for (int candidate : blocks[b]) {
            size_t mark = trail.size();
            if (assign(candidate) && search(next + 1)) return true;
            undo_to(mark);
        }
        return false;
    }
};

}  // namespace

TransversalWitness is_retraction_congruence(const Lattice& L, const Partition& theta) {
    if (!is_congruence(L, theta))
        throw NotACongruence("is_retraction_congruence: input is not a congruence");
    TransversalSearch s(L, theta);
    TransversalWitness w;
    if (s.search(0)) {
        DynBitset S(L.n);
        for (int r : s.rep) S.set(r);
        w.found = true;
        w.sublattice = std::move(S);
    }
    return w;
}

int RetPoset::index_of(const DynBitset& S) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), S);
    if (it == elements.end() || *it != S) return -1;
    return int(it - elements.begin());
}

int RetPoset::glb(int i, int j) const {
    DynBitset lows = below[i];
    lows &= below[j];
    if (lows.none()) return -1;
    int best = -1, best_count = -1;
    lows.for_each([&](int t) {
        int c = elements[t].count();
        if (c > best_count) {
            best_count = c;
            best = t;
        }
    });
    return lows.is_subset_of(below[best]) ? best : -1;
}

int RetPoset::lub(int i, int j) const {
    const int k = int(elements.size());
    DynBitset ups(k);
    for (int t = 0; t < k; ++t)
        if (below[t].test(i) && below[t].test(j)) ups.set(t);
    if (ups.none()) return -1;
    int best = -1, best_count = -1;
    ups.for_each([&](int t) {
        int c = elements[t].count();
        if (best_count < 0 || c < best_count) {
            best_count = c;
            best = t;
        }
    });
    bool least = true;
    ups.for_each([&](int t) {
        if (!below[t].test(best)) least = false;
    });
    return least ? best : -1;
}

RetPoset ret_poset(const Lattice& L, int cap) {
    RetPoset P;
    P.elements = retracts(L, RetractsMode::bruteforce, cap);
    P.elements.push_back(DynBitset(L.n));  // adjoin ∅
    std::sort(P.elements.begin(), P.elements.end());

    const int k = int(P.elements.size());
    P.below.assign(k, DynBitset(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (P.elements[j].is_subset_of(P.elements[i])) P.below[i].set(j);

    P.is_lattice = true;
    for (int i = 0; i < k && P.is_lattice; ++i)
        for (int j = i + 1; j < k; ++j)
            if (P.glb(i, j) < 0 || P.lub(i, j) < 0) {
                P.is_lattice = false;
                P.witness = {i, j};
                break;
            }
    return P;
}

EndoMap product_retraction(const Lattice& prod, const Lattice& L1, const Lattice& L2,
                           const EndoMap& f1, const EndoMap& f2) {
    if (!is_retraction(L1, f1) || !is_retraction(L2, f2))
        throw NotARetraction("product_retraction: a factor map is not a retraction");
    if (prod.coords.empty() || prod.factor_dims != std::make_pair(L1.n, L2.n))
        throw NotARetraction("product_retraction: lattice is not the product of the factors");
    const int n2 = L2.n;
    std::vector<int> img(prod.n);
    for (int x = 0; x < prod.n; ++x) {
        auto [x1, x2] = prod.coords[x];
        img[x] = f1(x1) * n2 + f2(x2);
    }
    return EndoMap(std::move(img));
}

}  // namespace retractlab
