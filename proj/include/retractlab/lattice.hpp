#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "retractlab/bitset.hpp"
#include "retractlab/errors.hpp"

namespace retractlab {

/// A finite lattice on elements 0..n-1.
///
/// The order is stored twice: `below[i]` is the down-set of i (all j with
/// j <= i) and `above[i]` the up-set. Meets and joins are table lookups;
/// everything downstream assumes O(1) lattice operations. Instances are
/// immutable after construction and safe to share across threads.
struct Lattice {
    int n = 0;
    std::vector<std::pair<int, int>> covers;  // Hasse edges (lower, upper), sorted
    std::vector<DynBitset> below;
    std::vector<DynBitset> above;
    std::vector<uint16_t> meet_tbl;  // n*n row-major
    std::vector<uint16_t> join_tbl;
    std::vector<std::string> labels;           // optional, size n when present
    std::vector<std::pair<int, int>> coords;   // optional, set by direct_product
    std::pair<int, int> factor_dims{0, 0};     // (|L1|,|L2|) when built as a product
    std::vector<int> linext;                   // a linear extension, bottom first
    std::vector<int> rank;                     // position of each element in linext
    int bottom = 0;
    int top = 0;

    bool leq(int a, int b) const { return below[b].test(a); }
    bool lt(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
    bool covers_pair(int lo, int hi) const;

    int meet(int a, int b) const { return meet_tbl[size_t(a) * n + b]; }
    int join(int a, int b) const { return join_tbl[size_t(a) * n + b]; }

    /// index of a labelled element, -1 when absent
    int label_index(const std::string& name) const;

    DynBitset universe() const {
        DynBitset u(n);
        u.set_all();
        return u;
    }
};

/// Builds a validated lattice from an acyclic cover relation. Redundant
/// (transitive) input pairs are tolerated; the stored `covers` are the
/// recomputed Hasse edges. Throws NotAPoset, NotALattice, SizeLimit.
Lattice lattice_from_covers(int n, std::vector<std::pair<int, int>> covers,
                            std::vector<std::string> labels = {},
                            int cap = caps::construction);

/// Builds a lattice from explicit down-set rows (a reflexive order matrix).
/// Used for derived orders such as congruence lattices and inclusion posets.
Lattice lattice_from_order(int n, const std::vector<DynBitset>& below_rows,
                           std::vector<std::string> labels = {},
                           int cap = caps::construction);

/// (a ∧ b, a ∨ b); throws IndexOutOfRange.
std::pair<int, int> meet_join(const Lattice& L, int a, int b);

struct StructuralFlags {
    bool is_chain;
    bool is_distributive;
    bool is_modular;
};

/// Decides chain/distributive/modular exactly via the laws over all triples.
StructuralFlags structural_flags(const Lattice& L);

/// Componentwise-ordered product with coords filled in.
Lattice direct_product(const Lattice& L1, const Lattice& L2, int cap = caps::construction);

/// Order-reversed copy. Labels are kept, coords are dropped.
Lattice dual(const Lattice& L);

/// Non-empty and closed under meet and join.
bool is_sublattice(const Lattice& L, const DynBitset& S);

/// x is neither bound and comparable with every element.
bool is_narrows(const Lattice& L, int x);

/// m(x,y,z) = (x∨y) ∧ (x∨z) ∧ (y∨z), the lattice majority term.
int majority_term(const Lattice& L, int x, int y, int z);

}  // namespace retractlab
