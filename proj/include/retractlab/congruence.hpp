#pragma once

#include <utility>
#include <vector>

#include "retractlab/lattice.hpp"

namespace retractlab {

/// Partition of 0..n-1 in canonical form: block ids are assigned in order
/// of each block's least element, so equal partitions have equal encodings
/// and plain comparison gives set semantics.
struct Partition {
    std::vector<int> block_of;
    int num_blocks = 0;

    Partition() = default;
    explicit Partition(std::vector<int> raw_block_of) : block_of(std::move(raw_block_of)) {
        canonicalize();
    }

    static Partition singletons(int n);
    static Partition one_block(int n);
    static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

    int size() const { return int(block_of.size()); }
    bool same_block(int a, int b) const { return block_of[a] == block_of[b]; }
    std::vector<std::vector<int>> blocks() const;

    /// transitive closure of the union; for lattice congruences this is the
    /// congruence join
    Partition join_with(const Partition& o) const;
    /// common refinement
    Partition meet_with(const Partition& o) const;
    bool refines(const Partition& o) const;

    void canonicalize();

    bool operator==(const Partition& o) const { return block_of == o.block_of; }
    bool operator<(const Partition& o) const { return block_of < o.block_of; }
};

/// Reflexive binary relation on 0..n-1 as an n×n bitmatrix.
struct Relation {
    int n = 0;
    DynBitset bits;

    Relation() = default;
    explicit Relation(int n_) : n(n_), bits(n_ * n_) {
        for (int i = 0; i < n_; ++i) set(i, i);
    }

    static Relation full(int n);
    static Relation of_partition(const Partition& P);
    static Relation order_of(const Lattice& L);

    bool test(int a, int b) const { return bits.test(a * n + b); }
    void set(int a, int b) { bits.set(a * n + b); }

    bool is_reflexive() const;
    bool is_symmetric() const;
    bool is_transitive() const;

    Partition to_partition() const;  // requires symmetry

    bool operator==(const Relation& o) const { return n == o.n && bits == o.bits; }
    bool operator<(const Relation& o) const { return bits < o.bits; }
};

bool is_congruence(const Lattice& L, const Partition& P);

/// Smallest congruence collapsing (a,b).
Partition principal_congruence(const Lattice& L, int a, int b);

/// All of Con L: principal congruences closed under join, canonical order.
std::vector<Partition> all_congruences(const Lattice& L, int cap = caps::brute_force);

/// Con L ordered by refinement, as a lattice. Meet is common refinement.
Lattice congruence_lattice(const Lattice& L, int cap = caps::brute_force);

/// Reflexive, transitive, and closed under the translations
/// x ↦ x∧z, x ↦ x∨z (equivalently, a subalgebra of L²).
bool is_compatible_quasiorder(const Lattice& L, const Relation& R);

/// All of Quo L by depth-first search over pair decisions with closure
/// propagation; canonical order.
std::vector<Relation> all_compatible_quasiorders(const Lattice& L, int cap = caps::quasiorder);

/// ρ1 × ρ2 on the product indexing (a1,a2) = a1*n2+a2.
Relation product_relation(const Relation& r1, const Relation& r2);
Partition product_congruence(const Partition& p1, const Partition& p2);

/// Splits a compatible quasiorder of a direct product into its components,
/// with ρ1 = {(x,y) : ∃z ((x,z),(y,z)) ∈ ρ}, and verifies ρ = ρ1 × ρ2.
/// Throws NotFactorizable when the reconstruction fails (i.e. the input was
/// not a compatible quasiorder of the product).
std::pair<Relation, Relation> factorize_product_relation(const Lattice& prod, const Relation& rho);
std::pair<Partition, Partition> factorize_product_relation(const Lattice& prod,
                                                           const Partition& theta);

}  // namespace retractlab
