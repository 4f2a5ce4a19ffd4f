#pragma once

#include <vector>

#include "gkz/rational.hpp"

namespace gkz {

using IntMat = std::vector<std::vector<Int>>;

// Row-style Hermite normal form (canonical basis of the integer row lattice).
IntMat hermite_normal_form(IntMat m);

// Basis of { u in Z^n : A u = 0 } for a d x n matrix A, as rows.
IntMat integer_kernel(const IntMat& a);

// True iff the integer row lattices agree (equal HNFs after dropping zero rows).
bool same_row_lattice(const IntMat& a, const IntMat& b);

// True iff the columns of A span Z^d over Z.
bool columns_span_lattice(const IntMat& a);

}  // namespace gkz
