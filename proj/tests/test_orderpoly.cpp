#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gkz/errors.hpp"
#include "gkz/groebner.hpp"
#include "gkz/orderpoly.hpp"

using namespace gkz;

static std::vector<std::vector<long long>> columns_of(const AMatrix& A) {
    std::vector<std::vector<long long>> cols(A.cols);
    for (int c = 0; c < A.cols; ++c)
        for (int r = 0; r < A.rows; ++r) cols[c].push_back(A.data[r][c]);
    return cols;
}

TEST_CASE("matrix of a single chain") {
    Poset P = chain_poset(1);
    DistributiveLattice L = ideal_lattice(P);
    AMatrix A = lattice_to_amatrix(P, L);
    CHECK(A.rows == 2);
    CHECK(A.cols == 2);
    CHECK(A.data == std::vector<std::vector<long long>>{{1, 1}, {0, 1}});
    CHECK(A.homogeneous);
}

TEST_CASE("matrix of the boolean lattice on three atoms") {
    Poset P = antichain_poset(3);
    DistributiveLattice L = ideal_lattice(P);
    AMatrix A = lattice_to_amatrix(P, L);
    CHECK(A.rows == 4);
    CHECK(A.cols == 8);
    // Columns in canonical order: {}, singletons, pairs, top.
    std::vector<std::vector<long long>> expect = {
        {1, 1, 1, 1, 1, 1, 1, 1},
        {0, 1, 0, 0, 1, 1, 0, 1},
        {0, 0, 1, 0, 1, 0, 1, 1},
        {0, 0, 0, 1, 0, 1, 1, 1},
    };
    CHECK(A.data == expect);
    CHECK(A.labels[0] == "{}");
    CHECK(A.label_index("{c1,c2,c3}") == 7);
}

TEST_CASE("matrix of the 2x2 grid has the classical column set") {
    Poset P = disjoint_chains({2, 2});
    DistributiveLattice L = ideal_lattice(P);
    AMatrix A = lattice_to_amatrix(P, L);
    CHECK(A.rows == 5);
    CHECK(A.cols == 9);
    // The column multiset equals the 9 vectors (1, i>=1, i>=2, j>=1, j>=2).
    std::multiset<std::vector<long long>> got;
    for (auto& c : columns_of(A)) got.insert(c);
    std::multiset<std::vector<long long>> expect;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            expect.insert({1, i >= 1, i >= 2, j >= 1, j >= 2});
    CHECK(got == expect);
}

TEST_CASE("hibi generators of a chain are empty") {
    Poset P = chain_poset(4);
    DistributiveLattice L = ideal_lattice(P);
    CHECK(hibi_toric_generators(L).gens.empty());
}

TEST_CASE("hibi generators of the boolean lattice") {
    Poset P = antichain_poset(3);
    DistributiveLattice L = ideal_lattice(P);
    IdealGens gens = hibi_toric_generators(L);
    // One binomial per incomparable pair: 3 + 3 + 3 mixed.
    CHECK(gens.gens.size() == 9);
    for (const auto& g : gens.gens) {
        REQUIRE(g.size() == 2);
        // x_a x_b - x_meet x_join with the incomparable product leading.
        const Monomial& lead = g.leading_monomial();
        const Monomial& trail = g.terms()[1].first;
        CHECK(mono_deg(lead) == 2);
        CHECK(mono_deg(trail) == 2);
        std::vector<int> ab, mj;
        for (int v = 0; v < L.size(); ++v) {
            for (unsigned e = 0; e < lead[v]; ++e) ab.push_back(v);
            for (unsigned e = 0; e < trail[v]; ++e) mj.push_back(v);
        }
        CHECK_FALSE(L.leq(ab[0], ab[1]));
        CHECK_FALSE(L.leq(ab[1], ab[0]));
        CHECK(L.meet(ab[0], ab[1]) == mj[0]);
        CHECK(L.join(ab[0], ab[1]) == mj[1]);
    }
}

TEST_CASE("hibi generators are a groebner basis") {
    std::vector<Poset> posets;
    posets.push_back(antichain_poset(3));
    posets.push_back(disjoint_chains({2, 2}));
    posets.push_back(poset_from_covers({"a1", "a2", "b1", "b2"}, {{0, 1}, {2, 3}, {2, 1}}));
    posets.push_back(disjoint_chains({1, 3}));
    for (const Poset& P : posets) {
        DistributiveLattice L = ideal_lattice(P);
        IdealGens gens = hibi_toric_generators(L);
        if (gens.gens.empty()) continue;
        GroebnerBasis gb = buchberger(gens);
        CHECK(spairs_reduce_to_zero(gb));
        std::set<std::string> in, out;
        for (const auto& g : gens.gens) in.insert(g.str());
        for (const auto& g : gb.polys) out.insert(g.str());
        CHECK(in == out);
    }
}

TEST_CASE("block form of the 2x2 grid matrix") {
    Poset P = disjoint_chains({2, 2});
    DistributiveLattice L = ideal_lattice(P);
    AMatrix A = lattice_to_amatrix(P, L);
    TwoChainShape sh = two_chain_decompose(P);
    BlockForm bf = to_block_form(A, sh);
    CHECK(bf.m == 2);
    CHECK(bf.k == 3);
    REQUIRE(bf.cols.size() == 9);
    std::vector<std::vector<long long>> expect = {
        {1, 1, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 1, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 1, 1},
        {0, 1, 0, 0, 1, 0, 0, 1, 0},
        {0, 0, 1, 0, 0, 1, 0, 0, 1},
    };
    CHECK(bf.matrix() == expect);
}

TEST_CASE("block form of the bowtie matrix drops one column") {
    Poset P = poset_from_covers({"a1", "a2", "b1", "b2"}, {{0, 1}, {2, 3}, {2, 1}});
    DistributiveLattice L = ideal_lattice(P);
    AMatrix A = lattice_to_amatrix(P, L);
    TwoChainShape sh = two_chain_decompose(P);
    BlockForm bf = to_block_form(A, sh);
    CHECK(bf.m == 2);
    CHECK(bf.k == 3);
    REQUIRE(bf.cols.size() == 8);
    // Same as the grid block form with the (2,0) column removed.
    std::vector<std::vector<long long>> expect = {
        {1, 1, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 1, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 1},
        {0, 1, 0, 0, 1, 0, 1, 0},
        {0, 0, 1, 0, 0, 1, 0, 1},
    };
    CHECK(bf.matrix() == expect);
}

TEST_CASE("block form of a single chain") {
    Poset P = chain_poset(2);
    DistributiveLattice L = ideal_lattice(P);
    AMatrix A = lattice_to_amatrix(P, L);
    TwoChainShape sh = shape_from_chains(P, {0, 1}, {});
    BlockForm bf = to_block_form(A, sh);
    CHECK(bf.m == 0);
    CHECK(bf.k == 3);
    CHECK(bf.cols.size() == 3);
}

TEST_CASE("block form rejects foreign matrices") {
    Poset P = disjoint_chains({2, 2});
    TwoChainShape sh = two_chain_decompose(P);
    AMatrix bad;
    bad.rows = 5;
    bad.cols = 2;
    bad.data = {{1, 1}, {1, 0}, {0, 1}, {0, 0}, {0, 0}};
    bad.labels = {"u", "v"};
    // Second column sets a2 without a1: not a chain prefix.
    CHECK_THROWS_AS(to_block_form(bad, sh), NotRowEquivalent);
}

TEST_CASE("free sum of one poset matches the lattice matrix") {
    Poset P = poset_from_covers({"a1", "a2", "b1", "b2"}, {{0, 1}, {2, 3}, {2, 1}});
    DistributiveLattice L = ideal_lattice(P);
    AMatrix direct = lattice_to_amatrix(P, L);
    AMatrix viasum = free_sum_matrix({&P});
    CHECK(viasum.rows == direct.rows);
    CHECK(viasum.cols == direct.cols);
    CHECK(viasum.data == direct.data);
}

TEST_CASE("free sum of two single chains") {
    Poset c1 = chain_poset(1, "a");
    Poset c2 = chain_poset(1, "b");
    AMatrix A = free_sum_matrix({&c1, &c2});
    CHECK(A.rows == 3);
    CHECK(A.cols == 3);
    CHECK(A.labels[0] == "0");
    CHECK(A.data == std::vector<std::vector<long long>>{{1, 1, 1}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("bouquet of squares matrix") {
    AMatrix A = bouquet_of_squares_matrix(3);
    CHECK(A.rows == 7);
    CHECK(A.cols == 10);
    CHECK(A.labels == std::vector<std::string>{"00", "01", "02", "03", "10", "20", "30",
                                               "11", "22", "33"});
    // Column ij touches rows a_i and b_j only.
    for (int c = 0; c < A.cols; ++c) {
        CHECK(A.data[0][c] == 1);
        int i = A.labels[c][0] - '0', j = A.labels[c][1] - '0';
        for (int s = 1; s <= 3; ++s) {
            CHECK(A.data[2 * s - 1][c] == (i == s ? 1 : 0));
            CHECK(A.data[2 * s][c] == (j == s ? 1 : 0));
        }
    }
    // The free sum of three squares is the same matrix.
    Poset sq = antichain_poset(2);
    AMatrix B = free_sum_matrix({&sq, &sq, &sq});
    CHECK(B.data == A.data);
    CHECK(B.labels == A.labels);
}
