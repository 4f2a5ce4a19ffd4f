#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkz/rational.hpp"

namespace gkz {

// Finite poset, n <= 64, elements addressed by index with string labels.
struct Poset {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;   // (lower, upper)
    std::vector<uint64_t> below;               // strictly below masks (transitive)
    std::vector<uint64_t> above;

    int n() const { return static_cast<int>(labels.size()); }
    bool less(int a, int b) const { return (above[a] >> b) & 1; }
    bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }
    int label_index(const std::string& l) const;
};

Poset poset_from_covers(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers);
Poset chain_poset(int n, const std::string& prefix = "a");
Poset antichain_poset(int n);
// Disjoint chains a1<..<ap and b1<..<bq (a-elements first).
Poset disjoint_chains(const std::vector<int>& lengths);

// All poset ideals ordered by inclusion; ideals listed in the canonical column
// order: cardinality ascending, then indicator vector lexicographically
// descending (element 0 first).
struct DistributiveLattice {
    const Poset* poset = nullptr;
    std::vector<uint64_t> ideals;
    std::vector<std::vector<int>> covers_up;  // Hasse edges by ideal index

    int size() const { return static_cast<int>(ideals.size()); }
    int index_of(uint64_t ideal) const;
    int meet(int a, int b) const { return index_of(ideals[a] & ideals[b]); }
    int join(int a, int b) const { return index_of(ideals[a] | ideals[b]); }
    bool leq(int a, int b) const { return (ideals[a] & ~ideals[b]) == 0; }
    std::string label(int idx) const;
};

DistributiveLattice ideal_lattice(const Poset& P, size_t cap = 1000000);

Int count_linear_extensions(const Poset& P, size_t cap = 1000000);
// Oracle-grade reference: permutation enumeration, n <= ~10.
Int count_linear_extensions_bruteforce(const Poset& P);
// Number of maximal chains of the ideal lattice (independent traversal).
Int count_maximal_chains(const DistributiveLattice& L);

std::pair<int, int> width_and_rank(const Poset& P, int exact_cap = 24);

// Two-chain decomposition data of section-4 type.
struct TwoChainShape {
    int p = 0, q = 0;
    std::vector<int> achain;            // element indices a1..ap (increasing in P)
    std::vector<int> bchain;            // b1..bq
    std::vector<std::vector<char>> in_a;  // (p+1) x (q+1) membership of A
    std::vector<int> jsharp;            // size p+1, min j with (i,j) in A
    std::vector<int> iflat;             // size q+1, min i with (i,j) in A

    bool member(int i, int j) const { return in_a[i][j]; }
};

TwoChainShape shape_from_chains(const Poset& P, std::vector<int> achain, std::vector<int> bchain);
// Dilworth decomposition into two chains; chains fixed by the lexicographically
// smallest valid chain assignment. Throws NotTwoChainDecomposable.
TwoChainShape two_chain_decompose(const Poset& P);

// f(n) = n(n-1)...(n - r(d-1) + 1) with the width/rank hypotheses on P minus
// the chain checked; throws HypothesisViolated with a witness description.
Int rank_bound(const Poset& P, uint64_t chain_mask, int d, int r);

std::string render_hasse(const Poset& P);

}  // namespace gkz
