#include "gkz/combinatorial.hpp"

#include <algorithm>
#include <functional>

namespace gkz {

TwoChainBasis two_chain_standard_monomials(const TwoChainShape& shape) {
    TwoChainBasis out;
    out.shape = shape;
    for (int i = 0; i <= shape.p; ++i)
        if (shape.jsharp[i] >= 0) out.forbidden.push_back({i, shape.jsharp[i]});
    for (int j = 0; j <= shape.q; ++j)
        if (shape.iflat[j] >= 0) out.forbidden.push_back({shape.iflat[j], j});
    std::sort(out.forbidden.begin(), out.forbidden.end());
    out.forbidden.erase(std::unique(out.forbidden.begin(), out.forbidden.end()),
                        out.forbidden.end());

    std::vector<std::pair<int, int>> ground;
    for (int i = 1; i <= shape.p; ++i)
        for (int j = 1; j <= shape.q; ++j)
            if (shape.member(i, j) &&
                !std::binary_search(out.forbidden.begin(), out.forbidden.end(),
                                    std::make_pair(i, j)))
                ground.push_back({i, j});

    std::vector<std::pair<int, int>> cur;
    std::function<void(size_t)> dfs = [&](size_t from) {
        out.sequences.push_back(cur);
        for (size_t g = from; g < ground.size(); ++g) {
            if (!cur.empty() &&
                (ground[g].first <= cur.back().first || ground[g].second <= cur.back().second))
                continue;
            cur.push_back(ground[g]);
            dfs(g + 1);
            cur.pop_back();
        }
    };
    dfs(0);
    std::sort(out.sequences.begin(), out.sequences.end(),
              [](const std::vector<std::pair<int, int>>& a,
                 const std::vector<std::pair<int, int>>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  for (size_t k = 0; k < a.size(); ++k)
                      if (a[k].first != b[k].first) return a[k].first < b[k].first;
                  for (size_t k = 0; k < a.size(); ++k)
                      if (a[k].second != b[k].second) return a[k].second < b[k].second;
                  return false;
              });
    return out;
}

BouquetBasis bouquet_standard_monomials(const std::vector<TwoChainShape>& shapes) {
    BouquetBasis out;
    for (const auto& s : shapes) out.parts.push_back(two_chain_standard_monomials(s));
    std::vector<int> pick(shapes.size(), 0);
    while (true) {
        out.picks.push_back(pick);
        int c = static_cast<int>(pick.size()) - 1;
        while (c >= 0) {
            if (++pick[c] < static_cast<int>(out.parts[c].sequences.size())) break;
            pick[c] = 0;
            --c;
        }
        if (c < 0) break;
    }
    return out;
}

std::map<int, Int> descent_profile(const DistributiveLattice& L, const TwoChainShape& shape) {
    std::map<int, Int> out;
    auto coords = [&](uint64_t ideal) {
        int i = 0, j = 0;
        for (int k = 0; k < shape.p; ++k)
            if ((ideal >> shape.achain[k]) & 1) ++i;
        for (int k = 0; k < shape.q; ++k)
            if ((ideal >> shape.bchain[k]) & 1) ++j;
        return std::make_pair(i, j);
    };
    // DFS over maximal chains, tracking the (i, j) path.
    std::vector<std::pair<int, int>> path;
    std::function<void(int)> dfs = [&](int v) {
        path.push_back(coords(L.ideals[v]));
        if (L.covers_up[v].empty()) {
            int descents = 0;
            for (size_t k = 1; k + 1 < path.size(); ++k) {
                auto [i0, j0] = path[k - 1];
                auto [i1, j1] = path[k];
                auto [i2, j2] = path[k + 1];
                if (i0 == i1 && i1 < i2 && j0 < j1 && j1 == j2 && j2 != shape.jsharp[i2])
                    ++descents;
            }
            out[descents] += 1;
        } else {
            for (int w : L.covers_up[v]) dfs(w);
        }
        path.pop_back();
    };
    dfs(0);
    return out;
}

}  // namespace gkz
