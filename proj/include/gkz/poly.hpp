#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gkz/param.hpp"

namespace gkz {

// Dense exponent vector; arity is fixed by the ring context.
using Monomial = std::vector<unsigned>;

int mono_deg(const Monomial& m);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b, requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
long long mono_weight(const Monomial& m, const std::vector<long long>& w);

// Term orders. RevLex is graded reverse lexicographic induced by a variable
// priority list (perm[0] = largest variable). Weight compares w-degrees first
// and falls back to RevLex(perm) on ties.
struct MonomialOrder {
    enum class Kind { RevLex, Weight };
    Kind kind = Kind::RevLex;
    std::vector<int> perm;            // priority list, largest variable first
    std::vector<long long> weight;    // Weight kind only
    bool graded = true;

    static MonomialOrder grevlex(int n);
    static MonomialOrder grevlex_perm(std::vector<int> perm);
    static MonomialOrder weighted(std::vector<long long> w);
    static MonomialOrder weighted(std::vector<long long> w, std::vector<int> tie_perm);

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

struct Ring {
    std::vector<std::string> vars;
    MonomialOrder ord;
    ParamCtxPtr params = no_params();

    int arity() const { return static_cast<int>(vars.size()); }
    int var_index(const std::string& name) const;
};
using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder ord, ParamCtxPtr params = no_params());
// Same variables and parameters, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder ord);

// Sparse polynomial; terms kept sorted in descending ring order with reduced
// nonzero coefficients.
class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(RingPtr ring) : ring_(std::move(ring)) {}
    SparsePoly(RingPtr ring, std::vector<std::pair<Monomial, ParamField>> terms);

    static SparsePoly zero(RingPtr ring) { return SparsePoly(std::move(ring)); }
    static SparsePoly constant(RingPtr ring, const ParamField& c);
    static SparsePoly monomial(RingPtr ring, Monomial m, ParamField c);
    static SparsePoly variable(RingPtr ring, int idx, unsigned pow = 1);

    const RingPtr& ring() const { return ring_; }
    const std::vector<std::pair<Monomial, ParamField>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const Monomial& leading_monomial() const;
    const ParamField& leading_coeff() const;
    ParamField coeff(const Monomial& m) const;

    SparsePoly operator-() const;
    SparsePoly operator+(const SparsePoly&) const;
    SparsePoly operator-(const SparsePoly&) const;
    SparsePoly operator*(const SparsePoly&) const;
    SparsePoly scaled(const ParamField& c) const;
    // this - c * x^m * g, the division-step workhorse.
    SparsePoly axpy_term(const ParamField& c, const Monomial& m, const SparsePoly& g) const;
    bool operator==(const SparsePoly& o) const;

    // Re-sort terms under a (possibly different) order of the same ring.
    SparsePoly reordered(const RingPtr& ring) const;
    SparsePoly specialized(const std::vector<Rat>& vals, RingPtr target) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<std::pair<Monomial, ParamField>> terms_;
    void normalize();
};

// Drops zero terms and reduces coefficient fractions (idempotent).
SparsePoly poly_reduce_coeffs(const SparsePoly& p);

// Substitutes parameter values; result lives in target (same vars, empty
// parameter context). Throws SpecializationSingular if a denominator vanishes.
SparsePoly specialize_params(const SparsePoly& p, const std::vector<Rat>& assignment, RingPtr target);

// Debug text syntax: terms joined by +/-, each a '*'-product of an optional
// rational literal, parameter names, and ring variables with optional ^pow.
SparsePoly parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace gkz
