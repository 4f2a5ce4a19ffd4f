#pragma once

#include <optional>

#include "gkz/poly.hpp"

namespace gkz {

struct IdealGens {
    RingPtr ring;
    std::vector<SparsePoly> gens;
};

struct GroebnerBasis {
    RingPtr ring;
    std::vector<SparsePoly> polys;      // reduced, monic, sorted by leading monomial
    std::vector<Monomial> leading;      // leading monomials, parallel to polys
};

// Minimal generators of a monomial ideal (antichain under divisibility).
struct MonomialIdeal {
    int arity = 0;
    std::vector<Monomial> gens;

    bool contains(const Monomial& m) const;
    void minimalize();
};

struct StandardMonomialSet {
    std::vector<Monomial> monos;  // sorted by (degree, lex)
    MonomialIdeal ideal;
};

// Remainder of p on division by gb; no monomial of the result is divisible by
// a leading monomial of gb.
SparsePoly normal_form(const SparsePoly& p, const GroebnerBasis& gb);

// Reduced Groebner basis via Buchberger with the normal selection strategy and
// the coprimality / chain criteria.
GroebnerBasis buchberger(const IdealGens& gens);

// (I : var^infinity). Adds an inverse variable y with y*var = 1 and eliminates
// it with a weight-block order; always correct, also for inhomogeneous input.
IdealGens saturate_by_variable(const IdealGens& gens, int var_index);
// Iterates single-variable saturations over all variables until stable.
IdealGens saturate_all_variables(const IdealGens& gens);

// Leading-term ideal. For weight orders every basis element must have a unique
// w-maximal monomial, otherwise NonGenericWeight.
MonomialIdeal initial_ideal(const GroebnerBasis& gb);

// All monomials outside mi; throws InfiniteStaircase if unbounded.
StandardMonomialSet standard_monomials(const MonomialIdeal& mi, int arity);

// Degree of R/mi: the numerator of the Hilbert series with all (1-z) factors
// removed, evaluated at z=1.
Int hilbert_degree(const MonomialIdeal& mi);

// True iff every S-pair of gb reduces to zero (audit check).
bool spairs_reduce_to_zero(const GroebnerBasis& gb);

// Ideal equality by mutual normal-form containment.
bool same_ideal(const IdealGens& a, const IdealGens& b);

}  // namespace gkz
