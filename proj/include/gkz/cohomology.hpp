#pragma once

#include "gkz/orderpoly.hpp"

namespace gkz {

enum class IntegrandMode { Power, Exponential };

// Kernel P = prod_j f_j^{alpha_j} t^gamma (Power) or exp(g) t^gamma
// (Exponential), with one fresh x symbol per column. Coefficients live in the
// parameter field generated by the x symbols, the alphas, and the gammas.
struct Integrand {
    IntegrandMode mode = IntegrandMode::Power;
    int m = 0;  // t variables
    int k = 0;  // blocks
    RingPtr tring;
    std::vector<SparsePoly> f;       // per block, Power mode
    std::vector<std::string> xnames;  // per column
    std::vector<int> block_of;        // column -> block
    std::vector<Monomial> tcol;       // column -> t exponent
    int alpha_base = 0;  // parameter index of alpha_1 (Power mode)
    int gamma_base = 0;  // parameter index of gamma_1

    int cols() const { return static_cast<int>(xnames.size()); }
};

Integrand build_integrand(const BlockForm& bf, IntegrandMode mode);

// One block spanning every column of a homogeneous matrix; the t-exponents are
// the rows below the ones row.
BlockForm single_block_form(const AMatrix& A);
// Confluent layout: every row is a t-exponent (exp(g) kernels have no block
// structure).
BlockForm exponential_block_form(const AMatrix& A);

// (u * P) / P for a del-monomial u in the x symbols: a scalar in the alphas
// times a t-monomial over a product of block powers.
struct RationalForm {
    ParamField scalar;       // falling-factorial prefactor
    Monomial t_mono;         // numerator t-monomial
    std::vector<int> fmult;  // denominator multiplicity per block
    int m = 0;

    bool is_zero() const { return scalar.is_zero(); }
};

RationalForm apply_operator(const Monomial& u, const Integrand& I);

enum class CocycleFormat { Text, Json, Latex };

std::string render_form(const RationalForm& rf, const Integrand& I, CocycleFormat fmt,
                        bool normalized);

std::string emit_cocycles(const std::vector<Monomial>& basis, const Integrand& I,
                          CocycleFormat fmt, bool normalized);

// d/d(var) with parameters treated as constants.
SparsePoly derivative(const SparsePoly& p, int var);

}  // namespace gkz
