#include "gkz/orderpoly.hpp"

#include <algorithm>
#include <cassert>

#include "gkz/errors.hpp"

namespace gkz {

IntMat AMatrix::as_intmat() const {
    IntMat m(rows, std::vector<Int>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = static_cast<long>(data[i][j]);
    return m;
}

int AMatrix::label_index(const std::string& l) const {
    for (int j = 0; j < cols; ++j)
        if (labels[j] == l) return j;
    return -1;
}

AMatrix lattice_to_amatrix(const Poset& P, const DistributiveLattice& L) {
    AMatrix A;
    A.rows = P.n() + 1;
    A.cols = L.size();
    A.homogeneous = true;
    A.data.assign(A.rows, std::vector<long long>(A.cols, 0));
    for (int c = 0; c < A.cols; ++c) {
        A.data[0][c] = 1;
        for (int v = 0; v < P.n(); ++v)
            if ((L.ideals[c] >> v) & 1) A.data[v + 1][c] = 1;
        A.labels.push_back(L.label(c));
    }
    return A;
}

RingPtr hibi_ring(const DistributiveLattice& L) {
    std::vector<std::string> vars;
    for (int c = 0; c < L.size(); ++c) vars.push_back("x" + std::to_string(c));
    // Canonical column order is a linear extension of the lattice, so variable
    // priority = column order realizes "alpha > beta => x_alpha < x_beta".
    return make_ring(std::move(vars), MonomialOrder::grevlex(L.size()));
}

IdealGens hibi_toric_generators(const DistributiveLattice& L) {
    RingPtr ring = hibi_ring(L);
    IdealGens out;
    out.ring = ring;
    for (int a = 0; a < L.size(); ++a) {
        for (int b = a + 1; b < L.size(); ++b) {
            if (L.leq(a, b) || L.leq(b, a)) continue;
            int m = L.meet(a, b), j = L.join(a, b);
            Monomial lead(L.size(), 0), trail(L.size(), 0);
            lead[a] += 1;
            lead[b] += 1;
            trail[m] += 1;
            trail[j] += 1;
            out.gens.push_back(SparsePoly::monomial(ring, lead, ParamField::from_int(1)) -
                               SparsePoly::monomial(ring, trail, ParamField::from_int(1)));
        }
    }
    return out;
}

AMatrix free_sum_matrix(const std::vector<const Poset*>& posets) {
    // A bouquet of squares gets the classical digit labels (00, 0j, i0, ii).
    bool all_squares = posets.size() >= 2;
    for (const Poset* P : posets)
        if (P->n() != 2 || P->comparable(0, 1)) all_squares = false;
    if (all_squares) return bouquet_of_squares_matrix(static_cast<int>(posets.size()));

    int d = 0;
    for (const Poset* P : posets) d += P->n();
    struct ColData {
        int card;
        int summand;
        int local_index;
        std::vector<long long> indicator;
        std::string label;
    };
    std::vector<ColData> cols;
    int offset = 0;
    std::vector<DistributiveLattice> lattices;
    std::vector<const Poset*> ps = posets;
    for (size_t s = 0; s < ps.size(); ++s) {
        DistributiveLattice L = ideal_lattice(*ps[s]);
        for (int c = 1; c < L.size(); ++c) {  // skip the shared empty ideal
            ColData cd;
            cd.card = __builtin_popcountll(L.ideals[c]);
            cd.summand = static_cast<int>(s);
            cd.local_index = c;
            cd.indicator.assign(d, 0);
            for (int v = 0; v < ps[s]->n(); ++v)
                if ((L.ideals[c] >> v) & 1) cd.indicator[offset + v] = 1;
            cd.label = (ps.size() > 1 ? std::to_string(s + 1) + ":" : "") + L.label(c);
            cols.push_back(std::move(cd));
        }
        offset += ps[s]->n();
    }
    std::stable_sort(cols.begin(), cols.end(), [](const ColData& x, const ColData& y) {
        if (x.card != y.card) return x.card < y.card;
        if (x.summand != y.summand) return x.summand < y.summand;
        return x.local_index < y.local_index;
    });

    AMatrix A;
    A.rows = d + 1;
    A.cols = static_cast<int>(cols.size()) + 1;
    A.homogeneous = true;
    A.data.assign(A.rows, std::vector<long long>(A.cols, 0));
    A.labels.push_back(ps.size() > 1 ? "0" : "{}");
    A.data[0][0] = 1;
    for (size_t c = 0; c < cols.size(); ++c) {
        A.data[0][c + 1] = 1;
        for (int r = 0; r < d; ++r) A.data[r + 1][c + 1] = cols[c].indicator[r];
        A.labels.push_back(cols[c].label);
    }
    return A;
}

AMatrix bouquet_of_squares_matrix(int n) {
    // Columns in the frozen order 00, 01..0n, 10..n0, 11..nn; square i has
    // elements (a_i, b_i) occupying rows 1+2(i-1) and 2+2(i-1).
    AMatrix A;
    A.rows = 2 * n + 1;
    A.cols = 3 * n + 1;
    A.homogeneous = true;
    A.data.assign(A.rows, std::vector<long long>(A.cols, 0));
    auto col_label = [](int i, int j) { return std::to_string(i) + std::to_string(j); };
    int c = 0;
    auto add_col = [&](int i, int j) {
        A.labels.push_back(col_label(i, j));
        A.data[0][c] = 1;
        if (i > 0) A.data[1 + 2 * (i - 1)][c] = 1;
        if (j > 0) A.data[2 + 2 * (j - 1)][c] = 1;
        ++c;
    };
    add_col(0, 0);
    for (int i = 1; i <= n; ++i) add_col(0, i);
    for (int i = 1; i <= n; ++i) add_col(i, 0);
    for (int i = 1; i <= n; ++i) add_col(i, i);
    return A;
}

std::vector<std::vector<long long>> BlockForm::matrix() const {
    std::vector<std::vector<long long>> out(k + m, std::vector<long long>(cols.size(), 0));
    for (size_t c = 0; c < cols.size(); ++c) {
        out[cols[c].block][c] = 1;
        for (int t = 0; t < m; ++t) out[k + t][c] = cols[c].texp[t];
    }
    return out;
}

BlockForm to_block_form(const AMatrix& A, const TwoChainShape& shape) {
    const int p = shape.p, q = shape.q;
    if (A.rows != p + q + 1)
        throw NotRowEquivalent("matrix row count does not fit the two-chain shape");
    // Identify each column's (i, j): i = number of a-chain rows set, j likewise;
    // the set rows must be chain prefixes.
    struct Keyed {
        int i, j, col;
    };
    std::vector<Keyed> keyed;
    for (int c = 0; c < A.cols; ++c) {
        if (A.data[0][c] != 1) throw NotRowEquivalent("missing ones row");
        int i = 0, j = 0;
        for (int k = 0; k < p; ++k)
            if (A.data[1 + shape.achain[k]][c] == 1) ++i;
        for (int k = 0; k < q; ++k)
            if (A.data[1 + shape.bchain[k]][c] == 1) ++j;
        // Prefix check.
        for (int k = 0; k < p; ++k)
            if ((A.data[1 + shape.achain[k]][c] == 1) != (k < i))
                throw NotRowEquivalent("column is not an a-chain prefix");
        for (int k = 0; k < q; ++k)
            if ((A.data[1 + shape.bchain[k]][c] == 1) != (k < j))
                throw NotRowEquivalent("column is not a b-chain prefix");
        if (!shape.member(i, j)) throw NotRowEquivalent("column outside the admissible set");
        keyed.push_back({i, j, c});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
        if (x.i != y.i) return x.i < y.i;
        return x.j < y.j;
    });

    BlockForm bf;
    bf.m = q;
    bf.k = p + 1;
    for (const auto& kd : keyed) {
        BlockForm::Col col;
        col.label = A.labels[kd.col];
        col.block = kd.i;
        col.texp.assign(q, 0);
        if (kd.j > 0) col.texp[kd.j - 1] = 1;
        bf.cols.push_back(std::move(col));
    }

    // The reduction is pure row operations over Z; certify by comparing the
    // integer row lattices (column order normalized to block-major).
    IntMat orig(A.rows, std::vector<Int>(A.cols));
    for (int r = 0; r < A.rows; ++r)
        for (size_t c = 0; c < keyed.size(); ++c)
            orig[r][c] = static_cast<long>(A.data[r][keyed[c].col]);
    auto reduced_ll = bf.matrix();
    IntMat reduced(reduced_ll.size(), std::vector<Int>(bf.cols.size()));
    for (size_t r = 0; r < reduced_ll.size(); ++r)
        for (size_t c = 0; c < bf.cols.size(); ++c)
            reduced[r][c] = static_cast<long>(reduced_ll[r][c]);
    if (!same_row_lattice(orig, reduced)) throw NotRowEquivalent();
    return bf;
}

}  // namespace gkz
