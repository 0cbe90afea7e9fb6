#include "retractlab/catalog.hpp"

#include <algorithm>

#include "retractlab/retraction.hpp"

namespace retractlab {

Lattice chain_lattice(int k) {
    if (k < 1) throw InvalidShape("chain_lattice: k must be >= 1");
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> labels;
    for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
    for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
    return lattice_from_covers(k, std::move(covers), std::move(labels));
}

Lattice boolean_lattice(int k) {
    if (k < 0 || k > 12) throw InvalidShape("boolean_lattice: k must be in 0..12");
    const int n = 1 << k;
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> labels(n);
    for (int x = 0; x < n; ++x) {
        for (int i = 0; i < k; ++i)
            if (!((x >> i) & 1)) covers.emplace_back(x, x | (1 << i));
        std::string s;
        for (int i = 0; i < k; ++i) s += ((x >> i) & 1) ? '1' : '0';
        labels[x] = s.empty() ? "e" : s;
    }
    return lattice_from_covers(n, std::move(covers), std::move(labels));
}

Lattice m3_lattice() {
    return lattice_from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
                               {"0", "a", "b", "c", "1"});
}

Lattice n5_lattice() {
    return lattice_from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}},
                               {"0", "a", "c", "b", "1"});
}

Lattice glued_squares_k7() {
    return lattice_from_covers(
        7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}},
        {"0", "x", "b", "y", "c", "d", "1"});
}

Lattice l12_lattice() {
    // 0:0 1:a 2:b 3:c1 4:c2 5:c3 6:p 7:q 8:d1 9:d2 10:d3 11:1
    return lattice_from_covers(12,
                               {{0, 1},
                                {0, 2},
                                {1, 3},
                                {2, 3},
                                {2, 4},
                                {2, 5},
                                {2, 7},
                                {3, 6},
                                {4, 6},
                                {5, 6},
                                {3, 8},
                                {4, 9},
                                {5, 10},
                                {7, 8},
                                {7, 9},
                                {7, 10},
                                {6, 11},
                                {8, 11},
                                {9, 11},
                                {10, 11}},
                               {"0", "a", "b", "c1", "c2", "c3", "p", "q", "d1", "d2", "d3", "1"});
}

namespace {

bool parse_call(const std::string& s, const std::string& head, std::vector<int>& args) {
    if (s.compare(0, head.size(), head) != 0) return false;
    if (s.size() == head.size()) return args.empty();
    if (s[head.size()] != '(' || s.back() != ')') return false;
    args.clear();
    std::string body = s.substr(head.size() + 1, s.size() - head.size() - 2);
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            args.push_back(std::stoi(tok));
        } catch (...) {
            return false;
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return true;
}

}  // namespace

CatalogEntry catalog(const std::string& name) {
    std::vector<int> args;
    if (name == "m3") return {name, m3_lattice(), "five-element diamond, simple and modular"};
    if (name == "n5") return {name, n5_lattice(), "five-element pentagon, the non-modular witness"};
    if (name == "glued_squares_k7")
        return {name, glued_squares_k7(), "glued sum of two squares; the middle element is a narrows"};
    if (name == "l12")
        return {name, l12_lattice(),
                "12-element modular lattice whose retract poset is not a lattice"};
    if (parse_call(name, "chain", args) && args.size() == 1)
        return {name, chain_lattice(args[0]), "finite chain"};
    if (parse_call(name, "boolean", args) && args.size() == 1)
        return {name, boolean_lattice(args[0]), "powerset lattice"};
    if (parse_call(name, "grid", args) && args.size() == 2) {
        Lattice g = direct_product(chain_lattice(args[0]), chain_lattice(args[1]));
        return {name, std::move(g), "product of two chains"};
    }
    throw UnknownName("catalog: unknown fixture '" + name + "'");
}

bool is_boolean_lattice(const Lattice& L) {
    if (!structural_flags(L).is_distributive) return false;
    for (int x = 0; x < L.n; ++x) {
        bool complemented = false;
        for (int y = 0; y < L.n && !complemented; ++y)
            if (L.meet(x, y) == L.bottom && L.join(x, y) == L.top) complemented = true;
        if (!complemented) return false;
    }
    return true;
}

BooleanMinusVerdict boolean_minus_element_check(int k, RemovedKind which) {
    if (k < 2 || k > 10) throw InvalidShape("boolean_minus_element_check: k must be in 2..10");
    const int full = 1 << k;
    int removed = which == RemovedKind::atom ? 1 : full - 2;  // drop the first atom/coatom

    std::vector<int> keep;
    keep.reserve(full - 1);
    for (int x = 0; x < full; ++x)
        if (x != removed) keep.push_back(x);
    const int n = int(keep.size());
    std::vector<DynBitset> below(n, DynBitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((keep[j] & keep[i]) == keep[j]) below[i].set(j);

    BooleanMinusVerdict v;
    v.k = k;
    v.removed = which;
    try {
        Lattice L = lattice_from_order(n, below);
        v.is_lattice = true;
        v.is_distributive = structural_flags(L).is_distributive;
    } catch (const NotALattice&) {
        v.is_lattice = false;
    }
    return v;
}

L8Report l8_constraint_report(const Lattice& L) {
    L8Report rep;
    rep.lattice = L;

    auto con = all_congruences(L);
    rep.con_size = long(con.size());
    rep.con_boolean_32 = rep.con_size == 32 && is_boolean_lattice(congruence_lattice(L));

    auto rc = rcon(L);
    std::vector<Partition> rcon_sorted(rc.begin(), rc.end());

    // candidate cover pairs
    for (auto [c, d] : L.covers) {
        Partition theta = principal_congruence(L, c, d);
        L8PairReport pr;
        pr.c = c;
        pr.d = d;
        pr.only_block_cd = theta.num_blocks == L.n - 1;
        if (!pr.only_block_cd) continue;  // pair is not of the wanted shape

        DynBitset no_c = L.universe(), no_d = L.universe();
        no_c.reset(c);
        no_d.reset(d);
        pr.removals_not_sublattices = !is_sublattice(L, no_c) && !is_sublattice(L, no_d);

        std::vector<Partition> expected;
        for (const Partition& t : con)
            if (!(t == theta)) expected.push_back(t);
        pr.rcon_is_con_minus_pair = rcon_sorted == expected;

        rep.pairs.push_back(pr);
    }

    // inclusion order on RCon: a lattice that fails distributivity?
    {
        const int k = int(rcon_sorted.size());
        std::vector<DynBitset> below(k, DynBitset(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (rcon_sorted[i].refines(rcon_sorted[j])) below[j].set(i);
        try {
            Lattice P = lattice_from_order(k, below);
            rep.rcon_poset_is_lattice = true;
            rep.rcon_poset_nondistributive = !structural_flags(P).is_distributive;
        } catch (const NotALattice&) {
            rep.rcon_poset_is_lattice = false;
        } catch (const NotAPoset&) {
            rep.rcon_poset_is_lattice = false;
        }
    }

    for (const L8PairReport& pr : rep.pairs) {
        int sat = 1;  // pair of the wanted congruence shape exists
        sat += pr.removals_not_sublattices;
        sat += rep.con_boolean_32;
        sat += pr.rcon_is_con_minus_pair;
        sat += rep.rcon_poset_is_lattice && rep.rcon_poset_nondistributive;
        rep.satisfied = std::max(rep.satisfied, sat);
        if (sat == 5) rep.full_match = true;
    }
    if (rep.pairs.empty())
        rep.satisfied = (rep.con_boolean_32 ? 1 : 0) +
                        (rep.rcon_poset_is_lattice && rep.rcon_poset_nondistributive ? 1 : 0);
    return rep;
}

std::vector<L8Report> search_l8(int enumeration_cap) {
    if (enumeration_cap < 8) throw SizeLimit("search_l8: enumeration cap below 8");
    std::vector<L8Report> out;
    for (const Lattice& L : enumerate_lattices(8, enumeration_cap))
        out.push_back(l8_constraint_report(L));
    std::stable_sort(out.begin(), out.end(), [](const L8Report& a, const L8Report& b) {
        if (a.full_match != b.full_match) return a.full_match;
        return a.satisfied > b.satisfied;
    });
    return out;
}

}  // namespace retractlab
