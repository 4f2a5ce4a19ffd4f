#pragma once

#include <map>

#include "gkz/poset.hpp"

namespace gkz {

// Admissible index sequences over the two-chain ground set: strictly
// increasing in both coordinates, forbidden pairs removed. The empty sequence
// stands for the monomial 1.
struct TwoChainBasis {
    TwoChainShape shape;
    std::vector<std::pair<int, int>> forbidden;            // sorted, unique
    std::vector<std::vector<std::pair<int, int>>> sequences;  // canonical order
};

TwoChainBasis two_chain_standard_monomials(const TwoChainShape& shape);

// Product basis of a free sum: one admissible sequence per summand.
struct BouquetBasis {
    std::vector<TwoChainBasis> parts;
    // Each element picks one sequence index per summand.
    std::vector<std::vector<int>> picks;
};

BouquetBasis bouquet_standard_monomials(const std::vector<TwoChainShape>& shapes);

// Maximal chains of J(P) counted by number of descents; a descent at step k
// needs i_{k-1} = i_k < i_{k+1}, j_{k-1} < j_k = j_{k+1}, and
// j_{k+1} != jsharp(i_{k+1}).
std::map<int, Int> descent_profile(const DistributiveLattice& L, const TwoChainShape& shape);

}  // namespace gkz
