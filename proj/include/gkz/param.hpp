#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gkz/rational.hpp"

namespace gkz {

// Names of the symbolic parameters (s1..sd, alpha1.., gamma1..) shared by all
// coefficients of a ring. An empty context means plain rational coefficients.
struct ParamCtx {
    std::vector<std::string> names;

    int index(const std::string& name) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }
};
using ParamCtxPtr = std::shared_ptr<const ParamCtx>;

inline ParamCtxPtr no_params() {
    static ParamCtxPtr empty = std::make_shared<ParamCtx>();
    return empty;
}

// Multivariate polynomial over Z in the parameters. Exponent vectors have a
// fixed arity; terms are kept in a map (lex on exponents) with no zero
// coefficients.
class IntPoly {
public:
    using Exp = std::vector<int>;

    int arity = 0;
    std::map<Exp, Int> terms;

    IntPoly() = default;
    explicit IntPoly(int a) : arity(a) {}

    static IntPoly constant(int arity, Int c);
    static IntPoly variable(int arity, int idx, int pow = 1);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    // Constant term; only meaningful for constants.
    Int constant_value() const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly&) const;
    IntPoly operator-(const IntPoly&) const;
    IntPoly operator*(const IntPoly&) const;
    bool operator==(const IntPoly& o) const { return arity == o.arity && terms == o.terms; }

    int deg(int var) const;
    int total_degree() const;
    // Coefficient of var^d as a polynomial with var's exponent zeroed.
    IntPoly coeff_of(int var, int d) const;
    // gcd of all coefficients, positive (0 for the zero polynomial).
    Int content() const;
    void divexact_int(const Int& g);
    // Sign of the lex-leading coefficient.
    int sign() const;

    // Exact division; returns false if b does not divide a.
    static bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& q);
    static IntPoly gcd(IntPoly a, IntPoly b);

    Rat eval(const std::vector<Rat>& vals) const;
    std::string str(const ParamCtx& ctx) const;

private:
    void add_term(const Exp& e, const Int& c);
    friend IntPoly mul_term(const IntPoly& p, const IntPoly::Exp& e, const Int& c);
};

IntPoly mul_term(const IntPoly& p, const IntPoly::Exp& e, const Int& c);

// Element of Q(params): reduced fraction of IntPolys. Denominator sign
// normalized positive; num/den coprime including integer content.
class ParamField {
public:
    ParamField() : num_(0), den_(IntPoly::constant(0, 1)) {}
    ParamField(IntPoly num, IntPoly den);

    static ParamField from_rat(const Rat& q, int arity = 0);
    static ParamField from_int(long v, int arity = 0) { return from_rat(rat(v), arity); }
    static ParamField parameter(int arity, int idx) {
        return ParamField(IntPoly::variable(arity, idx), IntPoly::constant(arity, 1));
    }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    int arity() const { return num_.arity; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    // Value as a rational; requires is_rational().
    Rat to_rat() const;

    ParamField operator-() const;
    ParamField operator+(const ParamField&) const;
    ParamField operator-(const ParamField&) const;
    ParamField operator*(const ParamField&) const;
    ParamField operator/(const ParamField&) const;
    bool operator==(const ParamField&) const;
    bool operator!=(const ParamField& o) const { return !(*this == o); }

    ParamField inverse() const;
    // Substitute parameter values; throws SpecializationSingular if the
    // denominator vanishes.
    Rat eval(const std::vector<Rat>& vals) const;

    std::string str(const ParamCtx& ctx) const;

private:
    IntPoly num_, den_;
    void reduce();
    static ParamField promote(const ParamField& f, int arity);
};

}  // namespace gkz
