#include "gkz/poset.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "gkz/errors.hpp"

namespace gkz {

int Poset::label_index(const std::string& l) const {
    for (int i = 0; i < n(); ++i)
        if (labels[i] == l) return i;
    return -1;
}

Poset poset_from_covers(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers) {
    const int n = static_cast<int>(labels.size());
    if (n > 64) throw LimitError("posets are limited to 64 elements");
    {
        std::set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second) throw DuplicateLabel("duplicate element label: " + l);
    }
    std::vector<std::vector<int>> up(n);
    for (auto [a, b] : covers) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError("cover index out of range");
        up[a].push_back(b);
    }
    // Topological order; a leftover node means a cycle.
    std::vector<int> indeg(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b : up[a]) ++indeg[b];
    std::vector<int> order, stack;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) stack.push_back(i);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int b : up[v])
            if (--indeg[b] == 0) stack.push_back(b);
    }
    if (static_cast<int>(order.size()) != n) throw CycleDetected();

    Poset P;
    P.labels = std::move(labels);
    P.covers = covers;
    P.below.assign(n, 0);
    P.above.assign(n, 0);
    for (int v : order)
        for (int b : up[v]) P.below[b] |= P.below[v] | (uint64_t(1) << v);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if ((P.below[b] >> a) & 1) P.above[a] |= uint64_t(1) << b;
    return P;
}

Poset chain_poset(int n, const std::string& prefix) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return poset_from_covers(std::move(labels), std::move(covers));
}

Poset antichain_poset(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i + 1));
    return poset_from_covers(std::move(labels), {});
}

Poset disjoint_chains(const std::vector<int>& lengths) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;
    int base = 0;
    for (size_t c = 0; c < lengths.size(); ++c) {
        std::string prefix(1, static_cast<char>('a' + c));
        for (int i = 0; i < lengths[c]; ++i) labels.push_back(prefix + std::to_string(i + 1));
        for (int i = 0; i + 1 < lengths[c]; ++i) covers.emplace_back(base + i, base + i + 1);
        base += lengths[c];
    }
    return poset_from_covers(std::move(labels), std::move(covers));
}

namespace {

// Canonical column order: cardinality ascending, then indicator lex descending
// (the ideal containing the lowest differing element comes first).
bool canonical_ideal_less(uint64_t a, uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    if (pa != pb) return pa < pb;
    uint64_t diff = a ^ b;
    if (diff == 0) return false;
    uint64_t low = diff & (~diff + 1);
    return (a & low) != 0;
}

bool is_ideal(const Poset& P, uint64_t mask) {
    for (int v = 0; v < P.n(); ++v)
        if ((mask >> v) & 1)
            if ((P.below[v] & ~mask) != 0) return false;
    return true;
}

}  // namespace

int DistributiveLattice::index_of(uint64_t ideal) const {
    auto it = std::lower_bound(ideals.begin(), ideals.end(), ideal, canonical_ideal_less);
    assert(it != ideals.end() && *it == ideal);
    return static_cast<int>(it - ideals.begin());
}

std::string DistributiveLattice::label(int idx) const {
    uint64_t m = ideals[idx];
    if (m == 0) return "{}";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int v = 0; v < poset->n(); ++v)
        if ((m >> v) & 1) {
            if (!first) os << ",";
            os << poset->labels[v];
            first = false;
        }
    os << "}";
    return os.str();
}

DistributiveLattice ideal_lattice(const Poset& P, size_t cap) {
    std::set<uint64_t> seen{0};
    std::vector<uint64_t> queue{0};
    while (!queue.empty()) {
        uint64_t I = queue.back();
        queue.pop_back();
        for (int v = 0; v < P.n(); ++v) {
            if ((I >> v) & 1) continue;
            if ((P.below[v] & ~I) != 0) continue;  // v not minimal in the complement
            uint64_t J = I | (uint64_t(1) << v);
            if (seen.insert(J).second) {
                if (seen.size() > cap) throw LatticeTooLarge();
                queue.push_back(J);
            }
        }
    }
    DistributiveLattice L;
    L.poset = &P;
    L.ideals.assign(seen.begin(), seen.end());
    std::sort(L.ideals.begin(), L.ideals.end(), canonical_ideal_less);
    L.covers_up.resize(L.ideals.size());
    for (size_t i = 0; i < L.ideals.size(); ++i) {
        uint64_t I = L.ideals[i];
        for (int v = 0; v < P.n(); ++v) {
            if ((I >> v) & 1) continue;
            if ((P.below[v] & ~I) != 0) continue;
            L.covers_up[i].push_back(L.index_of(I | (uint64_t(1) << v)));
        }
    }
    return L;
}

Int count_linear_extensions(const Poset& P, size_t cap) {
    std::unordered_map<uint64_t, Int> memo;
    memo.reserve(256);
    std::function<Int(uint64_t)> e = [&](uint64_t I) -> Int {
        if (I == 0) return 1;
        auto it = memo.find(I);
        if (it != memo.end()) return it->second;
        if (memo.size() > cap) throw LatticeTooLarge();
        Int total = 0;
        for (int v = 0; v < P.n(); ++v) {
            if (!((I >> v) & 1)) continue;
            if ((P.above[v] & I) != 0) continue;  // v not maximal in I
            total += e(I & ~(uint64_t(1) << v));
        }
        memo.emplace(I, total);
        return memo[I];
    };
    uint64_t full = (P.n() == 64) ? ~uint64_t(0) : ((uint64_t(1) << P.n()) - 1);
    return e(full);
}

Int count_linear_extensions_bruteforce(const Poset& P) {
    const int n = P.n();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Int count = 0;
    do {
        bool ok = true;
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[perm[i]] = i;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (P.less(a, b) && pos[a] > pos[b]) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

Int count_maximal_chains(const DistributiveLattice& L) {
    std::vector<Int> paths(L.size(), 0);
    paths[0] = 1;  // bottom is the first ideal in canonical order
    for (int i = 0; i < L.size(); ++i)
        for (int j : L.covers_up[i]) paths[j] += paths[i];
    return paths[L.size() - 1];
}

namespace {

int max_antichain(const Poset& P, uint64_t cand, int size, int& best) {
    if (size + __builtin_popcountll(cand) <= best) return best;
    if (cand == 0) {
        best = std::max(best, size);
        return best;
    }
    int v = __builtin_ctzll(cand);
    uint64_t rest = cand & ~(uint64_t(1) << v);
    // Include v: drop everything comparable to it.
    max_antichain(P, rest & ~(P.below[v] | P.above[v]), size + 1, best);
    // Exclude v.
    max_antichain(P, rest, size, best);
    return best;
}

Poset induced_poset(const Poset& P, uint64_t mask) {
    std::vector<int> keep;
    for (int v = 0; v < P.n(); ++v)
        if ((mask >> v) & 1) keep.push_back(v);
    std::vector<std::string> labels;
    for (int v : keep) labels.push_back(P.labels[v]);
    std::vector<std::pair<int, int>> covers;
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            if (P.less(keep[i], keep[j])) covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return poset_from_covers(std::move(labels), std::move(covers));
}

}  // namespace

std::pair<int, int> width_and_rank(const Poset& P, int exact_cap) {
    if (P.n() > exact_cap) throw TooLargeForExactWidth();
    uint64_t full = (P.n() == 64) ? ~uint64_t(0) : ((uint64_t(1) << P.n()) - 1);
    int best = 0;
    max_antichain(P, full, 0, best);
    // Longest chain by DP over the strict order.
    std::vector<int> depth(P.n(), -1);
    std::function<int(int)> h = [&](int v) -> int {
        if (depth[v] >= 0) return depth[v];
        int d = 0;
        for (int u = 0; u < P.n(); ++u)
            if (P.less(u, v)) d = std::max(d, h(u) + 1);
        return depth[v] = d;
    };
    int rank = 0;
    for (int v = 0; v < P.n(); ++v) rank = std::max(rank, h(v));
    if (P.n() == 0) rank = 0;
    return {P.n() == 0 ? 0 : best, rank};
}

TwoChainShape shape_from_chains(const Poset& P, std::vector<int> achain, std::vector<int> bchain) {
    auto sort_chain = [&](std::vector<int>& c) {
        std::sort(c.begin(), c.end(), [&](int x, int y) {
            if (x == y) return false;
            if (P.less(x, y)) return true;
            if (P.less(y, x)) return false;
            throw NotTwoChainDecomposable("chain members are incomparable");
        });
    };
    sort_chain(achain);
    sort_chain(bchain);
    TwoChainShape S;
    S.p = static_cast<int>(achain.size());
    S.q = static_cast<int>(bchain.size());
    S.achain = std::move(achain);
    S.bchain = std::move(bchain);
    S.in_a.assign(S.p + 1, std::vector<char>(S.q + 1, 0));
    for (int i = 0; i <= S.p; ++i)
        for (int j = 0; j <= S.q; ++j) {
            uint64_t mask = 0;
            for (int k = 0; k < i; ++k) mask |= uint64_t(1) << S.achain[k];
            for (int k = 0; k < j; ++k) mask |= uint64_t(1) << S.bchain[k];
            S.in_a[i][j] = is_ideal(P, mask) ? 1 : 0;
        }
    S.jsharp.assign(S.p + 1, -1);
    S.iflat.assign(S.q + 1, -1);
    for (int i = 0; i <= S.p; ++i)
        for (int j = 0; j <= S.q; ++j)
            if (S.in_a[i][j]) {
                S.jsharp[i] = j;
                break;
            }
    for (int j = 0; j <= S.q; ++j)
        for (int i = 0; i <= S.p; ++i)
            if (S.in_a[i][j]) {
                S.iflat[j] = i;
                break;
            }
    return S;
}

TwoChainShape two_chain_decompose(const Poset& P) {
    const int n = P.n();
    std::vector<int> color(n, -1);
    // BFS 2-coloring of the incomparability graph, lexicographically smallest
    // assignment (each new component's smallest vertex goes to chain a).
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int u = 0; u < n; ++u) {
                if (u == v || P.comparable(u, v)) continue;
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    throw NotTwoChainDecomposable();
                }
            }
        }
    }
    std::vector<int> a, b;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? a : b).push_back(v);
    return shape_from_chains(P, std::move(a), std::move(b));
}

Int rank_bound(const Poset& P, uint64_t chain_mask, int d, int r) {
    for (int x = 0; x < P.n(); ++x)
        for (int y = x + 1; y < P.n(); ++y)
            if (((chain_mask >> x) & 1) && ((chain_mask >> y) & 1) && !P.comparable(x, y))
                throw HypothesisViolated("C is not a chain: " + P.labels[x] + " || " + P.labels[y]);
    uint64_t full = (P.n() == 64) ? ~uint64_t(0) : ((uint64_t(1) << P.n()) - 1);
    Poset rest = induced_poset(P, full & ~chain_mask);
    auto [w, rk] = width_and_rank(rest);
    if (w > d - 1)
        throw HypothesisViolated("width of P minus C is " + std::to_string(w) + " > d-1 = " +
                                 std::to_string(d - 1));
    if (rk > r - 1)
        throw HypothesisViolated("rank of P minus C is " + std::to_string(rk) + " > r-1 = " +
                                 std::to_string(r - 1));
    return falling_factorial(P.n(), static_cast<long>(r) * (d - 1));
}

std::string render_hasse(const Poset& P) {
    std::ostringstream os;
    std::vector<int> level(P.n(), 0);
    std::vector<int> memo(P.n(), -1);
    std::function<int(int)> h = [&](int v) -> int {
        if (memo[v] >= 0) return memo[v];
        int d = 0;
        for (int u = 0; u < P.n(); ++u)
            if (P.less(u, v)) d = std::max(d, h(u) + 1);
        return memo[v] = d;
    };
    int maxl = 0;
    for (int v = 0; v < P.n(); ++v) maxl = std::max(maxl, level[v] = h(v));
    for (int l = maxl; l >= 0; --l) {
        os << "level " << l << ":";
        for (int v = 0; v < P.n(); ++v)
            if (level[v] == l) os << " " << P.labels[v];
        os << "\n";
    }
    os << "covers:";
    for (auto [a, b] : P.covers) os << " " << P.labels[a] << "<" << P.labels[b];
    os << "\n";
    return os.str();
}

}  // namespace gkz
