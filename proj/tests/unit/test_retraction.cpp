#include <doctest.h>

#include <algorithm>

#include <set>

#include "../support/oracles.hpp"
#include "retractlab/catalog.hpp"
#include "retractlab/grid.hpp"
#include "retractlab/retraction.hpp"

using namespace retractlab;

TEST_CASE("is_retraction basics") {
    Lattice sq = make_grid({2, 2});
    CHECK(is_retraction(sq, EndoMap::identity(4)));
    CHECK(is_retraction(sq, EndoMap::constant(4, sq.bottom)));
    // (x,y) -> (x,x): indices (i,j) = 2i+j, so image of (i,j) is (i,i)
    EndoMap diag({0, 0, 3, 3});
    CHECK(is_retraction(sq, diag));
    CHECK(diag.image() == DynBitset::from_indices(4, {0, 3}));

    // monotone but not a homomorphism on N5
    Lattice n5 = n5_lattice();  // 0 < a(1) < c(2) < 1(4), 0 < b(3) < 1(4)
    CHECK_FALSE(is_retraction(n5, EndoMap({0, 1, 1, 4, 4})));
}

TEST_CASE("all_retractions against exhaustive search") {
    for (const char* name : {"chain(2)", "chain(3)", "chain(4)", "boolean(2)", "m3", "n5"}) {
        Lattice L = catalog(name).lattice;
        CHECK(all_retractions(L) == oracles::retractions_by_exhaustion(L));
    }
}

TEST_CASE("retraction counts") {
    CHECK(all_retractions(chain_lattice(2)).size() == 3);
    CHECK(all_retractions(chain_lattice(3)).size() == 8);
    CHECK(all_retractions(m3_lattice()).size() == 6);  // identity + constants
    CHECK(all_retractions(make_grid({2, 2})).size() == 11);
}

TEST_CASE("fixed points equal the image") {
    for (const char* name : {"chain(4)", "boolean(2)", "m3", "n5", "glued_squares_k7",
                             "grid(2,3)", "grid(3,3)", "grid(2,5)"}) {
        Lattice L = catalog(name).lattice;
        for (const EndoMap& f : all_retractions(L)) {
            DynBitset fixed(L.n);
            for (int x = 0; x < L.n; ++x)
                if (f(x) == x) fixed.set(x);
            CHECK(fixed == f.image());
        }
    }
}

TEST_CASE("retracts of chains are all non-empty subsets") {
    for (int k = 1; k <= 5; ++k) {
        auto r = retracts(chain_lattice(k), RetractsMode::bruteforce);
        CHECK(r.size() == (size_t(1) << k) - 1);
    }
}

TEST_CASE("retracts of M3 and the square") {
    auto m3 = retracts(m3_lattice(), RetractsMode::bruteforce);
    CHECK(m3.size() == 6);  // five singletons and the whole lattice
    for (const DynBitset& S : m3) CHECK((S.count() == 1 || S.count() == 5));

    auto sq = retracts(make_grid({2, 2}), RetractsMode::bruteforce);
    CHECK(sq.size() == 10);
    CHECK(std::count_if(sq.begin(), sq.end(), [](const DynBitset& S) {
              return S == DynBitset::from_indices(4, {0, 3});
          }) == 1);  // the diagonal
}

TEST_CASE("bruteforce and transversal modes agree") {
    for (const char* name : {"chain(4)", "chain(5)", "boolean(2)", "boolean(3)", "m3", "n5",
                             "glued_squares_k7", "grid(2,3)", "grid(3,3)", "l12"}) {
        Lattice L = catalog(name).lattice;
        CHECK(retracts(L, RetractsMode::bruteforce) == retracts(L, RetractsMode::transversal));
    }
}

TEST_CASE("the diagonal retract of the square is not a product") {
    DynBitset diag = DynBitset::from_indices(4, {0, 3});
    for (uint64_t a = 1; a < 4; ++a)
        for (uint64_t b = 1; b < 4; ++b) {
            DynBitset S(4);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    if (((a >> i) & 1) && ((b >> j) & 1)) S.set(2 * i + j);
            CHECK(S != diag);
        }
}

TEST_CASE("rcon") {
    SUBCASE("chains: every congruence is a retraction congruence") {
        for (int k = 2; k <= 5; ++k)
            CHECK(rcon(chain_lattice(k)) == all_congruences(chain_lattice(k)));
    }
    SUBCASE("L12: RCon equals Con") {
        CHECK(rcon(l12_lattice()) == all_congruences(l12_lattice()));
    }
    SUBCASE("small grids: RCon equals Con") {
        for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}})
            CHECK(rcon(make_grid({m, n})) == all_congruences(make_grid({m, n})));
    }
}

TEST_CASE("rcon matches the transversal criterion both ways") {
    for (const char* name : {"chain(4)", "boolean(2)", "m3", "n5", "glued_squares_k7",
                             "grid(2,3)", "l12"}) {
        Lattice L = catalog(name).lattice;
        auto rc = rcon(L);
        std::set<Partition> rcs(rc.begin(), rc.end());
        for (const Partition& theta : all_congruences(L)) {
            auto w = is_retraction_congruence(L, theta);
            CHECK(w.found == bool(rcs.count(theta)));
            if (w.found) {
                CHECK(is_sublattice(L, *w.sublattice));
                std::vector<int> hits(theta.num_blocks, 0);
                w.sublattice->for_each([&](int x) { ++hits[theta.block_of[x]]; });
                for (int h : hits) CHECK(h == 1);
            }
        }
    }
}

TEST_CASE("is_retraction_congruence input validation and witnesses") {
    Lattice L = chain_lattice(3);
    auto w = is_retraction_congruence(L, Partition::singletons(3));
    CHECK(w.found);
    CHECK(*w.sublattice == L.universe());
    CHECK_THROWS_AS(is_retraction_congruence(L, Partition::from_blocks(3, {{0, 2}, {1}})),
                    NotACongruence);
}

TEST_CASE("the tower lattice has a non-retraction congruence") {
    // ordinal sum of a square, an edge, and a square: con(3,4) has no
    // sublattice transversal because both one-point removals fail
    Lattice tower = lattice_from_covers(
        8, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
    Partition theta = principal_congruence(tower, 3, 4);
    CHECK(theta == Partition::from_blocks(8, {{0}, {1}, {2}, {3, 4}, {5}, {6}, {7}}));
    CHECK_FALSE(is_retraction_congruence(tower, theta).found);
    DynBitset no3 = tower.universe(), no4 = tower.universe();
    no3.reset(3);
    no4.reset(4);
    CHECK_FALSE(is_sublattice(tower, no3));
    CHECK_FALSE(is_sublattice(tower, no4));
}

TEST_CASE("ret_poset") {
    SUBCASE("chain rule") {
        for (int k = 1; k <= 5; ++k) {
            RetPoset P = ret_poset(chain_lattice(k));
            CHECK(P.elements.size() == size_t(1) << k);
            CHECK(P.is_lattice);
        }
    }
    SUBCASE("Ret C_2 is the four-element boolean poset") {
        RetPoset P = ret_poset(chain_lattice(2));
        const int k = int(P.elements.size());
        std::vector<DynBitset> below(k, DynBitset(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (P.below[i].test(j)) below[i].set(j);
        CHECK(are_isomorphic(lattice_from_order(k, below), boolean_lattice(2)));
    }
}

TEST_CASE("ret_poset of the square") {
    RetPoset P = ret_poset(make_grid({2, 2}));
    CHECK(P.elements.size() == 11);
    CHECK(P.is_lattice);
    CHECK(P.elements[0].none());  // ∅ adjoined and sorted first
    // meets are intersections
    const int k = int(P.elements.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int g = P.glb(i, j);
            REQUIRE(g >= 0);
            CHECK(P.elements[g] == (P.elements[i] & P.elements[j]));
        }
}

TEST_CASE("ret_poset of L12 is not a lattice, witnessed by S1,S2") {
    Lattice L12 = l12_lattice();
    RetPoset P = ret_poset(L12);
    CHECK_FALSE(P.is_lattice);
    REQUIRE(P.witness.has_value());
    // the reported witness is a genuine failure
    auto [wi, wj] = *P.witness;
    CHECK((P.glb(wi, wj) < 0 || P.lub(wi, wj) < 0));

    // the classic failing pair: S1 = [0,p], S2 = [0,a] ∪ [q,1] has no meet
    int i1 = P.index_of(DynBitset::from_indices(12, {0, 1, 2, 3, 4, 5, 6}));
    int i2 = P.index_of(DynBitset::from_indices(12, {0, 1, 7, 8, 9, 10, 11}));
    REQUIRE(i1 >= 0);
    REQUIRE(i2 >= 0);
    CHECK(P.glb(i1, i2) < 0);

    // {0,a} is not a retract
    CHECK(P.index_of(DynBitset::from_indices(12, {0, 1})) < 0);

    // ∅ is the bottom, L the top
    CHECK(P.elements.front().none());
    CHECK(P.elements.back() == L12.universe());
}

TEST_CASE("product retractions") {
    Lattice c2 = chain_lattice(2);
    Lattice sq = direct_product(c2, c2);
    EndoMap id2 = EndoMap::identity(2);
    EndoMap const0 = EndoMap::constant(2, 0);

    CHECK(product_retraction(sq, c2, c2, id2, id2) == EndoMap::identity(4));
    CHECK(product_retraction(sq, c2, c2, const0, const0) == EndoMap::constant(4, 0));

    EndoMap left = product_retraction(sq, c2, c2, const0, id2);
    CHECK(is_retraction(sq, left));
    CHECK(left.image() == DynBitset::from_indices(4, {0, 1}));

    CHECK_THROWS_AS(product_retraction(sq, c2, c2, EndoMap({1, 0}), id2), NotARetraction);
}

TEST_CASE("rcon of products factorizes") {
    struct Pair {
        const char* a;
        const char* b;
    };
    for (auto [a, b] : {Pair{"chain(2)", "chain(2)"}, Pair{"chain(2)", "chain(3)"},
                        Pair{"m3", "chain(2)"}, Pair{"m3", "m3"}, Pair{"n5", "chain(3)"}}) {
        Lattice A = catalog(a).lattice, B = catalog(b).lattice;
        Lattice P = direct_product(A, B);
        std::set<Partition> expected;
        for (const Partition& x : rcon(A))
            for (const Partition& y : rcon(B)) expected.insert(product_congruence(x, y));
        auto got = rcon(P, 36);
        CHECK(std::set<Partition>(got.begin(), got.end()) == expected);
    }
}
