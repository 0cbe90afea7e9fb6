#include <doctest.h>

#include <algorithm>

#include <set>

#include "../support/oracles.hpp"
#include "retractlab/catalog.hpp"
#include "retractlab/grid.hpp"
#include "retractlab/retraction.hpp"

using namespace retractlab;

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);  // zero convention
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(-1, 2), InvalidShape);
    CHECK_THROWS_AS(binomial(3, -2), InvalidShape);
    CHECK(binomial(52, 26) == BigCount("495918532948104"));
}

TEST_CASE("make_grid") {
    Lattice g = make_grid({2, 3});
    CHECK(g.n == 6);
    CHECK(structural_flags(g).is_distributive);
    CHECK(make_grid({1, 4}).n == 4);
    CHECK(structural_flags(make_grid({1, 4})).is_chain);
    CHECK(are_isomorphic(make_grid({2, 2}), boolean_lattice(2)));
    CHECK_THROWS_AS(make_grid({100, 100}), SizeLimit);
}

TEST_CASE("classify_subset") {
    GridShape sq{2, 2};
    auto diag = classify_subset(sq, DynBitset::from_indices(4, {0, 3}));
    CHECK(diag.skew);
    CHECK(diag.doubly_injective);
    CHECK(diag.chain);
    CHECK(diag.is_retract);

    auto anti = classify_subset(sq, DynBitset::from_indices(4, {1, 2}));
    CHECK(anti.skew);
    CHECK(anti.doubly_injective);
    CHECK_FALSE(anti.chain);
    CHECK_FALSE(anti.is_retract);

    auto col = classify_subset(sq, DynBitset::from_indices(4, {0, 2}));
    CHECK(col.straight);
    CHECK(col.is_retract);

    auto empty = classify_subset(sq, DynBitset(4));
    CHECK(empty.empty);
    CHECK(empty.straight);  // ∅ is straight by definition
    CHECK(empty.is_retract);
}

TEST_CASE("count_retracts known values") {
    auto c22 = count_retracts({2, 2});
    CHECK(c22.sts == 10);
    CHECK(c22.isc == 1);
    CHECK(c22.total == 11);

    CHECK(count_retracts({2, 3}).total == 27);
    CHECK(count_retracts({3, 3}).total == 72);

    auto c50 = count_retracts({50, 50});
    CHECK(c50.sts == BigCount("1267650600228227149696889520130"));
    CHECK(c50.isc == BigCount("17963423287255511675489281668027802959"));
    CHECK(c50.total == BigCount("17963424554906111903716431364917323089"));

    CHECK_THROWS_AS(count_retracts({1, 5}), InvalidShape);
    CHECK(chain_ret_poset_size(5) == 32);
}

TEST_CASE("count symmetry") {
    for (auto [m, n] : {std::pair{2, 5}, {3, 7}, {4, 9}}) {
        auto a = count_retracts({m, n});
        auto b = count_retracts({n, m});
        CHECK(a.sts == b.sts);
        CHECK(a.isc == b.isc);
    }
}

TEST_CASE("rounded values for the thousand-square grid") {
    auto c = count_retracts({1000, 1000});
    CHECK(sci_round(c.sts) == "1.148131e602");
    CHECK(sci_round(c.isc) == "7.551515e763");
    CHECK(sci_round(c.total) == "7.551515e763");
}

TEST_CASE("sci_round carries") {
    CHECK(sci_round(BigCount("9999999"), 3) == "1.00e7");
    CHECK(sci_round(BigCount("1234567890"), 4) == "1.235e9");
    CHECK(sci_round(BigCount("1234449"), 4) == "1.234e6");
    CHECK(sci_round(BigCount(5)) == "5.000000e0");
}

TEST_CASE("structure theorem: enumeration equals brute force equals count") {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}, {2, 5}, {2, 6}}) {
        GridShape sh{m, n};
        auto enumerated = grid_retracts(sh);
        CHECK(BigCount(enumerated.size()) + 1 == count_retracts(sh).total);
        if (m * n <= 12) {
            auto brute = retracts(make_grid(sh), RetractsMode::bruteforce);
            CHECK(enumerated == brute);
        }
        // every enumerated subset classifies as a retract, and the classes
        // partition into straight and injective skew chains
        BigCount straight = 0, skew_chain = 0;
        for (const DynBitset& S : enumerated) {
            auto c = classify_subset(sh, S);
            CHECK(c.is_retract);
            CHECK_FALSE(c.empty);
            if (c.straight) ++straight;
            else ++skew_chain;
            CHECK(c.straight != (c.skew && c.chain && (c.left_injective || c.right_injective)));
        }
        CHECK(straight + 1 == count_retracts(sh).sts);
        CHECK(skew_chain == count_retracts(sh).isc);
    }
}

TEST_CASE("meet is intersection in Ret G") {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}}) {
        RetPoset P = ret_poset(make_grid({m, n}));
        CHECK(P.is_lattice);
        const int k = int(P.elements.size());
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                DynBitset inter = P.elements[i] & P.elements[j];
                int g = P.glb(i, j);
                REQUIRE(g >= 0);
                CHECK(P.elements[g] == inter);
                CHECK(P.index_of(inter) >= 0);
            }
    }
}

TEST_CASE("count consistency with ret_poset") {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}, {2, 6}})
        CHECK(BigCount(ret_poset(make_grid({m, n})).elements.size()) ==
              count_retracts({m, n}).total);
}

TEST_CASE("maximal chains") {
    SUBCASE("sizes") {
        for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {5, 2}, {4, 7}}) {
            auto mc = maximal_chains({m, n});
            CHECK(mc.h1.size() == size_t(std::max(m, n)) + 2);
            CHECK(mc.h2.size() == size_t(m) + n);
        }
    }
    SUBCASE("members are retracts forming chains, maximal in Ret G") {
        for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}}) {
            GridShape sh{m, n};
            RetPoset P = ret_poset(make_grid(sh));
            for (const auto& chain : {maximal_chains(sh).h1, maximal_chains(sh).h2}) {
                for (size_t t = 0; t + 1 < chain.size(); ++t) {
                    CHECK(chain[t].is_subset_of(chain[t + 1]));
                    CHECK(chain[t] != chain[t + 1]);
                }
                CHECK(chain.front().none());
                CHECK(chain.back().count() == m * n);
                for (const DynBitset& S : chain) CHECK(P.index_of(S) >= 0);
                // no retract fits strictly between consecutive members
                for (size_t t = 0; t + 1 < chain.size(); ++t)
                    for (const DynBitset& X : P.elements) {
                        if (X == chain[t] || X == chain[t + 1]) continue;
                        CHECK_FALSE((chain[t].is_subset_of(X) && X.is_subset_of(chain[t + 1])));
                    }
            }
        }
    }
}

TEST_CASE("monotone sequence count identity") {
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n)
            for (int s = 2; s <= 4; ++s)
                CHECK(BigCount(oracles::count_left_injective_chains(m, n, s)) ==
                      binomial(m, s) * binomial(n + s - 1, s));
}

TEST_CASE("grid_retracts guard") {
    CHECK_THROWS_AS(grid_retracts({50, 50}), SizeLimit);
}
