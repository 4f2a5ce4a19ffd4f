#pragma once

#include "gkz/groebner.hpp"
#include "gkz/intlinalg.hpp"
#include "gkz/poset.hpp"

namespace gkz {

// Integer matrix of column vectors, columns labeled by lattice elements (or raw
// indices). homogeneous means the first row is all ones.
struct AMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<long long>> data;  // rows x cols
    std::vector<std::string> labels;
    bool homogeneous = false;

    IntMat as_intmat() const;
    int label_index(const std::string& l) const;
};

// Vertices of the order polytope with an appended ones row. Column per lattice
// element in the canonical lattice order; row i+1 is the indicator of poset
// element i.
AMatrix lattice_to_amatrix(const Poset& P, const DistributiveLattice& L);

// Quadratic binomials x_a x_b - x_{a^b} x_{avb} over incomparable pairs, in the
// ring with the lattice-compatible graded reverse lexicographic order
// (column 0 = bottom = largest variable).
IdealGens hibi_toric_generators(const DistributiveLattice& L);
// The ring used by hibi_toric_generators (variables x<idx> per column).
RingPtr hibi_ring(const DistributiveLattice& L);

// Free sum: one shared empty-ideal column, then each summand's nonempty ideals;
// columns sorted by (cardinality, summand, canonical order).
AMatrix free_sum_matrix(const std::vector<const Poset*>& posets);
// Bouquet of n copies of J(P_{1,1}) with the digit labels 00,01,..,0n,10,..,n0,
// 11,..,nn used in the Lauricella F_A discussion.
AMatrix bouquet_of_squares_matrix(int n);

// Block structure of the row-reduced two-chain matrix: k = p+1 blocks, inside
// block i the columns (i,j) carry the t-exponent e_j (0 for j = 0).
struct BlockForm {
    int m = 0;  // number of t variables (= q)
    int k = 0;  // number of blocks (= p+1)
    struct Col {
        std::string label;
        int block;                     // 0-based block index
        std::vector<long long> texp;   // exponent vector in t, size m
    };
    std::vector<Col> cols;  // block-major order

    // The reduced matrix itself (block indicator rows, then t rows).
    std::vector<std::vector<long long>> matrix() const;
};

// Transforms a two-chain order-polytope matrix into block form; verifies that
// the integer row lattice is preserved (same hypergeometric system), else
// NotRowEquivalent.
BlockForm to_block_form(const AMatrix& A, const TwoChainShape& shape);

}  // namespace gkz
