#pragma once

#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "retractlab/lattice.hpp"

namespace retractlab {

/// Exact nonnegative integer; all counting stays in exact arithmetic.
using BigCount = boost::multiprecision::cpp_int;

/// C_m × C_n. Element (i,j) has index i*n + j.
struct GridShape {
    int m = 0;
    int n = 0;
};

/// binomial(a,b) with the convention that it is 0 for b > a; negative
/// arguments are rejected.
BigCount binomial(long a, long b);

Lattice make_grid(GridShape shape, int cap = caps::construction);

struct SubsetClass {
    bool empty;
    bool straight;  // ∅ or A1 × A2 with both factors non-empty
    bool skew;
    bool left_injective;
    bool right_injective;
    bool doubly_injective;
    bool chain;
    bool is_retract;  // empty ∨ straight ∨ (skew ∧ chain ∧ injective)
};

SubsetClass classify_subset(GridShape shape, const DynBitset& S);

struct RetractCounts {
    BigCount sts;  // straight subsets, ∅ included
    BigCount isc;  // injective skew chains
    BigCount total;
};

/// Exact counts: |sts| = 1 + (2^m − 1)(2^n − 1) and the alternating
/// binomial sum for |isc|. Requires m,n ≥ 2 (chains follow the 2^k
/// powerset rule instead).
RetractCounts count_retracts(GridShape shape);

/// |Ret C_k| = 2^k.
BigCount chain_ret_poset_size(int k);

/// Streams every non-empty straight subset and every injective skew chain,
/// each exactly once.
void for_each_grid_retract(GridShape shape, const std::function<void(const DynBitset&)>& emit);

/// Materialized structure-theorem enumeration; guards against huge outputs.
std::vector<DynBitset> grid_retracts(GridShape shape, long max_results = 4'000'000);

struct MaximalChains {
    std::vector<DynBitset> h1;  // max(m,n)+2 members
    std::vector<DynBitset> h2;  // m+n members
};

/// The two maximal chains of Ret G: the diagonal-then-widening chain and
/// the ideal-growth chain.
MaximalChains maximal_chains(GridShape shape);

/// Rounds an exact integer to scientific notation with `sig` significant
/// digits, e.g. "7.551515e763".
std::string sci_round(const BigCount& v, int sig = 7);

}  // namespace retractlab
