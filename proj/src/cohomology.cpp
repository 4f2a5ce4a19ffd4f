#include "gkz/cohomology.hpp"

#include <sstream>

#include "gkz/errors.hpp"

namespace gkz {

Integrand build_integrand(const BlockForm& bf, IntegrandMode mode) {
    if (bf.m <= 0 || bf.k <= 0 || bf.cols.empty()) throw MalformedBlocks("empty block data");
    Integrand I;
    I.mode = mode;
    I.m = bf.m;
    I.k = mode == IntegrandMode::Power ? bf.k : 0;

    auto ctx = std::make_shared<ParamCtx>();
    for (const auto& col : bf.cols) {
        I.xnames.push_back("x" + col.label);
        ctx->names.push_back(I.xnames.back());
        if (col.block < 0 || col.block >= bf.k) throw MalformedBlocks("block index out of range");
        if (static_cast<int>(col.texp.size()) != bf.m)
            throw MalformedBlocks("t-exponent arity mismatch");
        I.block_of.push_back(col.block);
        Monomial t(bf.m, 0);
        for (int j = 0; j < bf.m; ++j) {
            if (col.texp[j] < 0) throw MalformedBlocks("negative t-exponent");
            t[j] = static_cast<unsigned>(col.texp[j]);
        }
        I.tcol.push_back(std::move(t));
    }
    I.alpha_base = mode == IntegrandMode::Power ? static_cast<int>(ctx->names.size()) : -1;
    if (mode == IntegrandMode::Power)
        for (int j = 0; j < bf.k; ++j) ctx->names.push_back("alpha" + std::to_string(j + 1));
    I.gamma_base = static_cast<int>(ctx->names.size());
    for (int j = 0; j < bf.m; ++j) ctx->names.push_back("gamma" + std::to_string(j + 1));

    std::vector<std::string> tvars;
    for (int j = 0; j < bf.m; ++j) tvars.push_back("t" + std::to_string(j + 1));
    I.tring = make_ring(std::move(tvars), MonomialOrder::grevlex(bf.m), ctx);

    if (mode == IntegrandMode::Power) {
        const int arity = static_cast<int>(ctx->names.size());
        I.f.assign(bf.k, SparsePoly::zero(I.tring));
        for (int c = 0; c < I.cols(); ++c)
            I.f[I.block_of[c]] = I.f[I.block_of[c]] +
                                 SparsePoly::monomial(I.tring, I.tcol[c],
                                                      ParamField::parameter(arity, c));
    }
    return I;
}

BlockForm single_block_form(const AMatrix& A) {
    if (!A.homogeneous) throw MalformedBlocks("matrix lacks the ones row");
    BlockForm bf;
    bf.k = 1;
    bf.m = A.rows - 1;
    for (int c = 0; c < A.cols; ++c) {
        BlockForm::Col col;
        col.label = A.labels[c];
        col.block = 0;
        for (int r = 1; r < A.rows; ++r) col.texp.push_back(A.data[r][c]);
        bf.cols.push_back(std::move(col));
    }
    return bf;
}

BlockForm exponential_block_form(const AMatrix& A) {
    BlockForm bf;
    bf.k = 1;
    bf.m = A.rows;
    for (int c = 0; c < A.cols; ++c) {
        BlockForm::Col col;
        col.label = A.labels[c];
        col.block = 0;
        for (int r = 0; r < A.rows; ++r) col.texp.push_back(A.data[r][c]);
        bf.cols.push_back(std::move(col));
    }
    return bf;
}

RationalForm apply_operator(const Monomial& u, const Integrand& I) {
    if (static_cast<int>(u.size()) != I.cols())
        throw PreconditionError("operator arity does not match the column count");
    const int arity = static_cast<int>(I.tring->params->names.size());
    RationalForm rf;
    rf.m = I.m;
    rf.scalar = ParamField::from_rat(rat(1), arity);
    rf.t_mono.assign(I.m, 0);
    rf.fmult.assign(I.k, 0);
    std::vector<int> hits(std::max(I.k, 1), 0);
    for (int c = 0; c < I.cols(); ++c) {
        for (unsigned e = 0; e < u[c]; ++e) {
            rf.t_mono = mono_mul(rf.t_mono, I.tcol[c]);
            if (I.mode == IntegrandMode::Power) {
                int j = I.block_of[c];
                // Each hit on block j peels one more power: alpha_j - hits.
                ParamField factor = ParamField::parameter(arity, I.alpha_base + j) -
                                    ParamField::from_rat(rat(hits[j]), arity);
                rf.scalar = rf.scalar * factor;
                ++hits[j];
                ++rf.fmult[j];
            }
        }
    }
    if (rf.scalar.is_zero()) rf.fmult.assign(I.k, 0);
    return rf;
}

namespace {

std::string mono_str(const Monomial& m, const std::string& stem, bool latex) {
    std::string out;
    for (size_t j = 0; j < m.size(); ++j) {
        if (m[j] == 0) continue;
        if (!out.empty()) out += latex ? " " : "*";
        out += latex ? stem + "_{" + std::to_string(j + 1) + "}" : stem + std::to_string(j + 1);
        if (m[j] > 1) out += latex ? "^{" + std::to_string(m[j]) + "}" : "^" + std::to_string(m[j]);
    }
    return out.empty() ? "1" : out;
}

std::string block_name(const Integrand& I, int j, bool latex) {
    if (I.k == 1) return "Q";
    return latex ? "f_{" + std::to_string(j + 1) + "}" : "f" + std::to_string(j + 1);
}

}  // namespace

std::string render_form(const RationalForm& rf, const Integrand& I, CocycleFormat fmt,
                        bool normalized) {
    const ParamCtx& ctx = *I.tring->params;
    if (fmt == CocycleFormat::Json) {
        std::ostringstream os;
        os << "{\"scalar\":\"" << (normalized ? std::string("1") : rf.scalar.str(ctx))
           << "\",\"t\":[";
        for (int j = 0; j < rf.m; ++j) os << (j ? "," : "") << rf.t_mono[j];
        os << "],\"denominator\":[";
        for (size_t j = 0; j < rf.fmult.size(); ++j) os << (j ? "," : "") << rf.fmult[j];
        os << "]}";
        return os.str();
    }
    const bool latex = fmt == CocycleFormat::Latex;
    std::string num = mono_str(rf.t_mono, "t", latex);
    std::string den;
    for (size_t j = 0; j < rf.fmult.size(); ++j) {
        if (rf.fmult[j] == 0) continue;
        if (!den.empty()) den += latex ? " " : "*";
        den += block_name(I, static_cast<int>(j), latex);
        if (rf.fmult[j] > 1)
            den += latex ? "^{" + std::to_string(rf.fmult[j]) + "}"
                         : "^" + std::to_string(rf.fmult[j]);
    }
    std::string scal;
    if (!normalized && !rf.scalar.is_one()) scal = "(" + rf.scalar.str(ctx) + ")*";
    std::string dt = latex ? "\\,dt" : " dt";
    if (den.empty()) {
        if (num == "1") return scal.empty() ? "1" + dt : scal + "1" + dt;
        return scal + num + dt;
    }
    if (latex) return scal + "\\frac{" + num + "\\,dt}{" + den + "}";
    return scal + num + dt + "/" + den;
}

std::string emit_cocycles(const std::vector<Monomial>& basis, const Integrand& I,
                          CocycleFormat fmt, bool normalized) {
    std::ostringstream os;
    if (fmt == CocycleFormat::Json) os << "[";
    for (size_t i = 0; i < basis.size(); ++i) {
        RationalForm rf = apply_operator(basis[i], I);
        if (fmt == CocycleFormat::Json)
            os << (i ? "," : "") << render_form(rf, I, fmt, normalized);
        else
            os << render_form(rf, I, fmt, normalized) << "\n";
    }
    if (fmt == CocycleFormat::Json) os << "]";
    return os.str();
}

SparsePoly derivative(const SparsePoly& p, int var) {
    SparsePoly out = SparsePoly::zero(p.ring());
    const int arity = p.ring()->params ? static_cast<int>(p.ring()->params->names.size()) : 0;
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        out = out + SparsePoly::monomial(p.ring(), d,
                                         c * ParamField::from_rat(rat(m[var]), arity));
    }
    return out;
}

}  // namespace gkz
