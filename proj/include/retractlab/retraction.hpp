#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "retractlab/congruence.hpp"
#include "retractlab/lattice.hpp"

namespace retractlab {

/// Total self-map of a lattice.
struct EndoMap {
    std::vector<int> image_of;

    EndoMap() = default;
    explicit EndoMap(std::vector<int> img) : image_of(std::move(img)) {}
    static EndoMap identity(int n);
    static EndoMap constant(int n, int value);

    int operator()(int x) const { return image_of[x]; }
    int size() const { return int(image_of.size()); }

    DynBitset image() const;
    Partition kernel() const;

    bool operator==(const EndoMap& o) const { return image_of == o.image_of; }
    bool operator<(const EndoMap& o) const { return image_of < o.image_of; }
};

/// Meet/join homomorphism that is idempotent.
bool is_retraction(const Lattice& L, const EndoMap& f);

/// All idempotent endomorphisms, by backtracking along a linear extension
/// with homomorphism and idempotence propagation; canonical order.
std::vector<EndoMap> all_retractions(const Lattice& L, int cap = caps::brute_force);

enum class RetractsMode { bruteforce, transversal };

/// The set of retracts, without ∅.
/// bruteforce: images of all retractions. transversal: sublattices S for
/// which some congruence has every block meeting S exactly once. The two
/// agree (the transversal criterion); tests and the CLI cross-check them.
std::vector<DynBitset> retracts(const Lattice& L, RetractsMode mode, int cap = caps::brute_force);

/// RCon L: kernels of all retractions, deduplicated, canonical order.
std::vector<Partition> rcon(const Lattice& L, int cap = caps::brute_force);

struct TransversalWitness {
    bool found = false;
    std::optional<DynBitset> sublattice;  // one element per block when found
};

/// Decides whether Θ is a retraction congruence by searching for a
/// sublattice transversal; throws NotACongruence on bad input.
TransversalWitness is_retraction_congruence(const Lattice& L, const Partition& theta);

/// Retracts plus ∅ ordered by inclusion.
struct RetPoset {
    std::vector<DynBitset> elements;  // canonically sorted; [0] is ∅
    std::vector<DynBitset> below;     // below[i] = {j : elements[j] ⊆ elements[i]}
    bool is_lattice = false;
    std::optional<std::pair<int, int>> witness;  // least pair lacking a meet or join

    int index_of(const DynBitset& S) const;
    /// greatest lower bound within the poset, -1 when none exists
    int glb(int i, int j) const;
    int lub(int i, int j) const;
};

RetPoset ret_poset(const Lattice& L, int cap = caps::brute_force);

/// (x1,x2) ↦ (f1(x1), f2(x2)) on a product lattice; throws NotARetraction
/// unless both inputs are retractions of their factors.
EndoMap product_retraction(const Lattice& prod, const Lattice& L1, const Lattice& L2,
                           const EndoMap& f1, const EndoMap& f2);

}  // namespace retractlab
