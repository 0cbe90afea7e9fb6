#pragma once

#include <string>
#include <vector>

#include "retractlab/congruence.hpp"
#include "retractlab/lattice.hpp"

namespace retractlab {

struct CatalogEntry {
    std::string name;
    Lattice lattice;
    std::string notes;
};

/// Named fixtures: chain(k), boolean(k), m3, n5, glued_squares_k7,
/// grid(m,n), l12. Throws UnknownName.
CatalogEntry catalog(const std::string& name);

Lattice chain_lattice(int k);
Lattice boolean_lattice(int k);
Lattice m3_lattice();
Lattice n5_lattice();
Lattice glued_squares_k7();
Lattice l12_lattice();

/// One representative per isomorphism class of n-element lattices, by
/// canonical extension of meet-semilattices (an n-element lattice minus its
/// top is an (n-1)-element meet-semilattice, and conversely); deterministic
/// order.
std::vector<Lattice> enumerate_lattices(int n, int cap = caps::enumeration);

/// Canonical isomorphism-invariant encoding of the order matrix.
std::string canonical_form(const Lattice& L);

bool are_isomorphic(const Lattice& A, const Lattice& B);

/// Per-lattice report for the eight-element search: a full match has a
/// cover pair (c,d) whose principal congruence collapses only {c,d}, with
/// both one-element removals failing to be sublattices, Con L boolean with
/// 32 members, RCon = Con ∖ {con(c,d)}, and RCon a non-distributive lattice
/// under inclusion.
struct L8PairReport {
    int c = -1, d = -1;
    bool only_block_cd = false;
    bool removals_not_sublattices = false;
    bool rcon_is_con_minus_pair = false;
};

struct L8Report {
    Lattice lattice;
    std::vector<L8PairReport> pairs;
    long con_size = 0;
    bool con_boolean_32 = false;
    bool rcon_poset_is_lattice = false;
    bool rcon_poset_nondistributive = false;
    int satisfied = 0;  // best constraint count over candidate pairs (of 5)
    bool full_match = false;
};

L8Report l8_constraint_report(const Lattice& L);

/// Scans every 8-element lattice; full matches first, then the ranked rest.
std::vector<L8Report> search_l8(int enumeration_cap = caps::enumeration);

/// Finite boolean algebra test: distributive and complemented.
bool is_boolean_lattice(const Lattice& L);

enum class RemovedKind { atom, coatom };

struct BooleanMinusVerdict {
    int k = 0;
    RemovedKind removed = RemovedKind::coatom;
    bool is_lattice = false;
    bool is_distributive = false;
};

/// B_k minus one atom or coatom, as an inclusion-ordered poset. For k >= 3
/// the result is a lattice but not a distributive one.
BooleanMinusVerdict boolean_minus_element_check(int k, RemovedKind which);

}  // namespace retractlab
