#include "gkz/intlinalg.hpp"

#include <algorithm>
#include <cassert>

namespace gkz {

namespace {

// Eliminates below-pivot entries in column col using row operations on m (and
// mirrored on u when present), starting from row `row`. Returns true if a
// nonzero pivot was produced at (row, col).
bool reduce_column(IntMat& m, IntMat* u, int row, int col) {
    const int rows = static_cast<int>(m.size());
    auto swap_rows = [&](int a, int b) {
        std::swap(m[a], m[b]);
        if (u) std::swap((*u)[a], (*u)[b]);
    };
    auto addmul = [&](int dst, int src, const Int& c) {
        for (size_t k = 0; k < m[dst].size(); ++k) m[dst][k] += c * m[src][k];
        if (u)
            for (size_t k = 0; k < (*u)[dst].size(); ++k) (*u)[dst][k] += c * (*u)[src][k];
    };
    while (true) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (m[r][col] != 0 && (pivot == -1 || abs(m[r][col]) < abs(m[pivot][col]))) pivot = r;
        if (pivot == -1) return false;
        swap_rows(row, pivot);
        bool clean = true;
        for (int r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Int q = m[r][col] / m[row][col];
            // Round toward zero is fine; loop until all entries vanish.
            addmul(r, row, -q);
            if (m[r][col] != 0) clean = false;
        }
        if (clean) break;
    }
    if (m[row][col] < 0) {
        for (auto& x : m[row]) x = -x;
        if (u)
            for (auto& x : (*u)[row]) x = -x;
    }
    return true;
}

// Triangularizes m (with optional transform accumulator); returns pivot columns.
std::vector<int> echelonize(IntMat& m, IntMat* u) {
    if (m.empty()) return {};
    const int cols = static_cast<int>(m[0].size());
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
        if (!reduce_column(m, u, row, col)) continue;
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

IntMat hermite_normal_form(IntMat m) {
    std::vector<int> pivots = echelonize(m, nullptr);
    // Reduce entries above each pivot into [0, pivot).
    for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
        int col = pivots[i];
        for (int r = 0; r < i; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), m[i][col].get_mpz_t());
            if (q != 0)
                for (size_t k = 0; k < m[r].size(); ++k) m[r][k] -= q * m[i][k];
        }
    }
    // Drop zero rows.
    IntMat out;
    for (size_t r = 0; r < m.size(); ++r) {
        bool zero = std::all_of(m[r].begin(), m[r].end(), [](const Int& x) { return x == 0; });
        if (!zero) out.push_back(std::move(m[r]));
    }
    return out;
}

IntMat integer_kernel(const IntMat& a) {
    const int d = static_cast<int>(a.size());
    const int n = d == 0 ? 0 : static_cast<int>(a[0].size());
    // Work on B = A^T with a unimodular accumulator U: rows of U where U*B is
    // zero form a basis of the left kernel of B, i.e. of ker(A).
    IntMat b(n, std::vector<Int>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) b[j][i] = a[i][j];
    IntMat u(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;
    echelonize(b, &u);
    IntMat kernel;
    for (int r = 0; r < n; ++r) {
        bool zero = std::all_of(b[r].begin(), b[r].end(), [](const Int& x) { return x == 0; });
        if (zero) kernel.push_back(u[r]);
    }
    return kernel;
}

bool same_row_lattice(const IntMat& a, const IntMat& b) {
    return hermite_normal_form(a) == hermite_normal_form(b);
}

bool columns_span_lattice(const IntMat& a) {
    IntMat h = hermite_normal_form(a);
    if (h.size() != a.size()) return false;  // rank deficient
    Int det = 1;
    // Pivot entries sit on the staircase; product of pivots must be 1.
    size_t col = 0;
    for (size_t r = 0; r < h.size(); ++r) {
        while (col < h[r].size() && h[r][col] == 0) ++col;
        if (col == h[r].size()) return false;
        det *= h[r][col];
    }
    return det == 1;
}

}  // namespace gkz
