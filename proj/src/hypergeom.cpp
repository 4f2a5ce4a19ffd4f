#include "gkz/hypergeom.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "gkz/errors.hpp"
#include "gkz/intlinalg.hpp"

namespace gkz {

IdealGens DeformedIdeal::all_gens() const {
    IdealGens out;
    out.ring = ring;
    out.gens = distraction_gens;
    out.gens.insert(out.gens.end(), euler_forms.begin(), euler_forms.end());
    return out;
}

namespace {

RingPtr partial_ring(int n, ParamCtxPtr params = no_params()) {
    std::vector<std::string> vars;
    for (int j = 0; j < n; ++j) vars.push_back("d" + std::to_string(j + 1));
    return make_ring(std::move(vars), MonomialOrder::grevlex(n), std::move(params));
}

RingPtr theta_ring(int n, std::vector<int> perm, ParamCtxPtr params) {
    std::vector<std::string> vars;
    for (int j = 0; j < n; ++j) vars.push_back("th" + std::to_string(j + 1));
    if (perm.empty()) {
        perm.resize(n);
        for (int j = 0; j < n; ++j) perm[j] = j;
    }
    return make_ring(std::move(vars), MonomialOrder::grevlex_perm(std::move(perm)),
                     std::move(params));
}

SparsePoly lattice_binomial(const RingPtr& ring, const std::vector<Int>& u) {
    Monomial plus(u.size(), 0), minus(u.size(), 0);
    for (size_t j = 0; j < u.size(); ++j) {
        if (u[j] > 0) {
            plus[j] = static_cast<unsigned>(u[j].get_ui());
        } else if (u[j] < 0) {
            Int w = -u[j];
            minus[j] = static_cast<unsigned>(w.get_ui());
        }
    }
    return SparsePoly::monomial(ring, plus, ParamField::from_int(1)) -
           SparsePoly::monomial(ring, minus, ParamField::from_int(1));
}

std::vector<Rat> random_s(int d, unsigned long long seed) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    std::vector<Rat> s;
    for (int i = 0; i < d; ++i) s.push_back(random_rat(rng));
    return s;
}

}  // namespace

namespace {

// When the columns are distinct indicator vectors closed under union and
// intersection they enumerate a distributive lattice, and the classical
// binomials x_a x_b - x_{a^b} x_{avb} generate the (already saturated) toric
// ideal directly; this skips the kernel-plus-saturation route.
bool hibi_shortcut(const AMatrix& A, const RingPtr& ring, std::vector<SparsePoly>& out) {
    if (!A.homogeneous || A.rows < 2 || A.rows > 65) return false;
    std::vector<uint64_t> sets(A.cols, 0);
    std::map<uint64_t, int> index;
    for (int c = 0; c < A.cols; ++c) {
        if (A.data[0][c] != 1) return false;
        for (int r = 1; r < A.rows; ++r) {
            if (A.data[r][c] != 0 && A.data[r][c] != 1) return false;
            if (A.data[r][c]) sets[c] |= uint64_t(1) << (r - 1);
        }
        if (!index.emplace(sets[c], c).second) return false;
    }
    for (int a = 0; a < A.cols; ++a)
        for (int b = a + 1; b < A.cols; ++b) {
            auto mit = index.find(sets[a] & sets[b]);
            auto jit = index.find(sets[a] | sets[b]);
            if (mit == index.end() || jit == index.end()) return false;
            // Every row must be a lattice valuation, else the binomials do not
            // lie in the kernel.
            for (int r = 1; r < A.rows; ++r)
                if (A.data[r][a] + A.data[r][b] !=
                    A.data[r][mit->second] + A.data[r][jit->second])
                    return false;
        }
    // The binomials generate the kernel only when the rows realize the full
    // Hibi matrix rank: number of join-irreducible columns plus one.
    int join_irreducible = 0;
    for (int a = 0; a < A.cols; ++a) {
        int lower_covers = 0;
        for (int b = 0; b < A.cols; ++b) {
            if (b == a || (sets[b] & ~sets[a]) != 0 || sets[b] == sets[a]) continue;
            bool maximal = true;
            for (int c = 0; c < A.cols; ++c)
                if (c != a && c != b && (sets[b] & ~sets[c]) == 0 && sets[b] != sets[c] &&
                    (sets[c] & ~sets[a]) == 0 && sets[c] != sets[a])
                    maximal = false;
            if (maximal) ++lower_covers;
        }
        if (lower_covers == 1) ++join_irreducible;
    }
    if (A.rows != join_irreducible + 1) return false;
    for (int a = 0; a < A.cols; ++a)
        for (int b = a + 1; b < A.cols; ++b) {
            if ((sets[a] & sets[b]) == sets[a] || (sets[a] & sets[b]) == sets[b]) continue;
            Monomial lead(A.cols, 0), trail(A.cols, 0);
            lead[a] += 1;
            lead[b] += 1;
            trail[index[sets[a] & sets[b]]] += 1;
            trail[index[sets[a] | sets[b]]] += 1;
            out.push_back(SparsePoly::monomial(ring, lead, ParamField::from_int(1)) -
                          SparsePoly::monomial(ring, trail, ParamField::from_int(1)));
        }
    return true;
}

}  // namespace

IdealGens toric_ideal(const AMatrix& A) {
    if (!columns_span_lattice(A.as_intmat()))
        throw PreconditionError("matrix columns do not span the full integer lattice");
    RingPtr ring = partial_ring(A.cols);
    IdealGens gens;
    gens.ring = ring;
    if (hibi_shortcut(A, ring, gens.gens)) return gens;
    for (const auto& u : integer_kernel(A.as_intmat())) gens.gens.push_back(lattice_binomial(ring, u));
    if (gens.gens.empty()) return gens;
    return saturate_all_variables(gens);
}

std::vector<SparsePoly> distraction(const MonomialIdeal& mi, const RingPtr& ring) {
    std::vector<SparsePoly> out;
    for (const Monomial& alpha : mi.gens) {
        SparsePoly p = SparsePoly::constant(ring, ParamField::from_int(1));
        for (size_t i = 0; i < alpha.size(); ++i)
            for (unsigned k = 0; k < alpha[i]; ++k)
                p = p * (SparsePoly::variable(ring, static_cast<int>(i)) -
                         SparsePoly::constant(ring, ParamField::from_int(static_cast<long>(k))));
        out.push_back(p);
    }
    return out;
}

std::pair<MonomialIdeal, std::vector<long long>> initial_toric_ideal(const AMatrix& A,
                                                                     const BasisOptions& opts) {
    IdealGens gens = toric_ideal(A);
    const int n = A.cols;
    if (opts.wmode == WeightMode::TermOrder) {
        GroebnerBasis gb = buchberger(gens);
        return {initial_ideal(gb), {}};
    }
    if (opts.wmode == WeightMode::Given) {
        if (static_cast<int>(opts.weight.size()) != n)
            throw PreconditionError("weight length does not match column count");
        RingPtr wring = with_order(gens.ring, MonomialOrder::weighted(opts.weight));
        IdealGens wgens{wring, {}};
        for (const auto& g : gens.gens) wgens.gens.push_back(g.reordered(wring));
        GroebnerBasis gb = buchberger(wgens);
        return {initial_ideal(gb), opts.weight};
    }
    // Reference degree from the graded term order; the deformation theorem
    // needs deg in_w(I_A) = deg I_A, so weights breaking it are rejected.
    Int ref_deg = hilbert_degree(initial_ideal(buchberger(gens)));
    Rng rng(opts.seed);
    for (int attempt = 0; attempt < opts.weight_retries; ++attempt) {
        std::vector<long long> w;
        for (int j = 0; j < n; ++j) w.push_back(random_weight_entry(rng));
        try {
            RingPtr wring = with_order(gens.ring, MonomialOrder::weighted(w));
            IdealGens wgens{wring, {}};
            for (const auto& g : gens.gens) wgens.gens.push_back(g.reordered(wring));
            GroebnerBasis gb = buchberger(wgens);
            MonomialIdeal mi = initial_ideal(gb);
            if (hilbert_degree(mi) != ref_deg) continue;
            return {mi, w};
        } catch (const NonGenericWeight&) {
            continue;
        }
    }
    throw NonGenericWeight("no generic weight found within the retry budget");
}

DeformedIdeal build_deformed_ideal(const AMatrix& A, const std::vector<long long>& w,
                                   ParamMode mode, const std::vector<Rat>& s_values) {
    const int n = A.cols, d = A.rows;
    ParamCtxPtr params = no_params();
    if (mode == ParamMode::Symbolic) {
        auto ctx = std::make_shared<ParamCtx>();
        for (int i = 0; i < d; ++i) ctx->names.push_back("s" + std::to_string(i + 1));
        params = ctx;
    } else if (static_cast<int>(s_values.size()) != d) {
        throw PreconditionError("specialized mode needs one parameter value per row");
    }

    BasisOptions opts;
    opts.wmode = w.empty() ? WeightMode::TermOrder : WeightMode::Given;
    opts.weight = w;
    auto [mi, w_used] = initial_toric_ideal(A, opts);

    DeformedIdeal J;
    J.ring = theta_ring(n, {}, params);
    J.distraction_gens = distraction(mi, J.ring);
    J.weight = w_used;
    J.mode = mode;
    J.s_values = s_values;
    for (int i = 0; i < d; ++i) {
        SparsePoly e = SparsePoly::zero(J.ring);
        for (int j = 0; j < n; ++j)
            if (A.data[i][j] != 0)
                e = e + SparsePoly::variable(J.ring, j)
                            .scaled(ParamField::from_rat(rat(A.data[i][j]),
                                                         static_cast<int>(params->names.size())));
        ParamField si = mode == ParamMode::Symbolic ? ParamField::parameter(d, i)
                                                    : ParamField::from_rat(s_values[i]);
        J.euler_forms.push_back(e - SparsePoly::constant(J.ring, si));
    }
    return J;
}

PfaffianBasis pfaffian_basis(const AMatrix& A, const BasisOptions& opts) {
    const int n = A.cols, d = A.rows;
    const int tries = opts.symbolic_s ? 1 : std::max(1, opts.reseeds);
    for (int attempt = 0; attempt < tries; ++attempt) {
        unsigned long long seed = opts.seed + static_cast<unsigned long long>(attempt);
        BasisOptions local = opts;
        local.seed = seed;
        auto [mi, w] = initial_toric_ideal(A, local);

        ParamMode mode = opts.symbolic_s ? ParamMode::Symbolic : ParamMode::Specialized;
        std::vector<Rat> s = opts.symbolic_s ? std::vector<Rat>{} : random_s(d, seed);

        ParamCtxPtr params = no_params();
        if (mode == ParamMode::Symbolic) {
            auto ctx = std::make_shared<ParamCtx>();
            for (int i = 0; i < d; ++i) ctx->names.push_back("s" + std::to_string(i + 1));
            params = ctx;
        }
        RingPtr tring = theta_ring(n, opts.theta_perm, params);

        DeformedIdeal J;
        J.ring = tring;
        J.distraction_gens = distraction(mi, tring);
        J.weight = w;
        J.mode = mode;
        J.s_values = s;
        const int pd = static_cast<int>(params->names.size());
        for (int i = 0; i < d; ++i) {
            SparsePoly e = SparsePoly::zero(tring);
            for (int j = 0; j < n; ++j)
                if (A.data[i][j] != 0)
                    e = e + SparsePoly::variable(tring, j)
                                .scaled(ParamField::from_rat(rat(A.data[i][j]), pd));
            ParamField si = mode == ParamMode::Symbolic ? ParamField::parameter(d, i)
                                                        : ParamField::from_rat(s[i]);
            J.euler_forms.push_back(e - SparsePoly::constant(tring, si));
        }

        try {
            GroebnerBasis gb = buchberger(J.all_gens());
            StandardMonomialSet sm = standard_monomials(initial_ideal(gb), n);
            PfaffianBasis out;
            out.monos = std::move(sm);
            out.rank = static_cast<int>(out.monos.monos.size());
            out.gb = std::move(gb);
            out.weight = w;
            out.seed = seed;
            out.mode = mode;
            out.s_values = s;
            return out;
        } catch (const InfiniteStaircase&) {
            if (attempt + 1 == tries) throw;
        }
    }
    throw InfiniteStaircase("unreachable");
}

CompanionMatrices companion_matrices(const PfaffianBasis& basis) {
    const RingPtr& ring = basis.gb.ring;
    const int n = ring->arity();
    const int r = basis.rank;
    CompanionMatrices cm;
    cm.rank = r;
    cm.matrices.assign(n, std::vector<std::vector<ParamField>>(
                              r, std::vector<ParamField>(r, ParamField())));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < r; ++j) {
            SparsePoly uj = SparsePoly::monomial(ring, basis.monos.monos[j],
                                                 ParamField::from_int(1));
            SparsePoly nf = normal_form(SparsePoly::variable(ring, i) * uj, basis.gb);
            for (const auto& [m, c] : nf.terms()) {
                auto it = std::find(basis.monos.monos.begin(), basis.monos.monos.end(), m);
                if (it == basis.monos.monos.end())
                    throw PreconditionError("normal form escapes the standard monomial span");
                cm.matrices[i][j][it - basis.monos.monos.begin()] = c;
            }
        }
    }
    return cm;
}

int max_threads() {
    if (const char* v = std::getenv("GKZ_MAX_THREADS")) {
        int n = std::atoi(v);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

RankReport rank_consistency(const AMatrix& A, int trials, unsigned long long seed) {
    RankReport rep;
    rep.ranks.assign(trials, 0);
    rep.hilbert_degrees.assign(trials, 0);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) {
            BasisOptions opts;
            opts.wmode = WeightMode::Random;
            opts.seed = seed + 1000ULL * static_cast<unsigned long long>(t);
            PfaffianBasis b = pfaffian_basis(A, opts);
            rep.ranks[t] = b.rank;
            BasisOptions fixed;
            fixed.wmode = WeightMode::Given;
            fixed.weight = b.weight;
            auto [mi, w] = initial_toric_ideal(A, fixed);
            rep.hilbert_degrees[t] = hilbert_degree(mi);
        }
    };
    int nthreads = std::min(max_threads(), trials);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    rep.pass = true;
    for (int t = 1; t < trials; ++t)
        if (rep.ranks[t] != rep.ranks[0] || rep.hilbert_degrees[t] != rep.hilbert_degrees[0])
            rep.pass = false;
    return rep;
}

}  // namespace gkz
