// End-to-end acceptance checks; prints one pass/fail line per criterion and
// exits nonzero if any fail.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "gkz/cohomology.hpp"
#include "gkz/combinatorial.hpp"
#include "gkz/hypergeom.hpp"

using namespace gkz;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, double secs) {
    std::ostringstream os;
    os << "criterion " << idx << " (" << name << "): " << (ok ? "PASS" : "FAIL") << " ["
       << secs << "s]";
    std::cout << os.str() << std::endl;
    if (!ok) ++failures;
}

template <typename F>
void run(int idx, const std::string& name, double budget_secs, F body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::cout << "  exception: " << e.what() << std::endl;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_secs) {
        std::cout << "  over budget: " << secs << "s > " << budget_secs << "s" << std::endl;
        ok = false;
    }
    report(idx, name, ok, secs);
}

Monomial seq_to_mono(const DistributiveLattice& L, const TwoChainShape& sh,
                     const std::vector<std::pair<int, int>>& seq) {
    Monomial m(L.size(), 0);
    for (auto [i, j] : seq) {
        uint64_t ideal = 0;
        for (int k = 0; k < i; ++k) ideal |= 1ULL << sh.achain[k];
        for (int k = 0; k < j; ++k) ideal |= 1ULL << sh.bchain[k];
        m[L.index_of(ideal)] += 1;
    }
    return m;
}

AMatrix boolean3_matrix() {
    Poset P = antichain_poset(3);
    return lattice_to_amatrix(P, ideal_lattice(P));
}

AMatrix confluent_matrix() {
    // Delete the ones row and the empty-set column of the boolean matrix.
    AMatrix A = boolean3_matrix();
    AMatrix Ap;
    Ap.rows = A.rows - 1;
    Ap.cols = A.cols - 1;
    Ap.homogeneous = false;
    Ap.data.assign(Ap.rows, std::vector<long long>(Ap.cols, 0));
    for (int r = 0; r < Ap.rows; ++r)
        for (int c = 0; c < Ap.cols; ++c) Ap.data[r][c] = A.data[r + 1][c + 1];
    for (int c = 0; c < Ap.cols; ++c) Ap.labels.push_back(A.labels[c + 1]);
    return Ap;
}

// All two-chain shapes with p a-elements and q b-elements, generated from
// monotone cover attachment maps and deduplicated by the admissible set.
void for_each_shape(int p, int q, const std::function<void(const Poset&, const TwoChainShape&)>& fn) {
    std::vector<int> phi(p + 1, 0), psi(q + 1, 0);
    std::set<std::vector<char>> seen;
    std::function<void(int)> enum_psi;
    std::function<void(int)> enum_phi = [&](int i) {
        if (i > p) {
            enum_psi(1);
            return;
        }
        for (int v = phi[i - 1]; v <= q; ++v) {
            phi[i] = v;
            enum_phi(i + 1);
        }
    };
    enum_psi = [&](int j) {
        if (j > q) {
            std::vector<std::string> labels;
            for (int i = 1; i <= p; ++i) labels.push_back("a" + std::to_string(i));
            for (int jj = 1; jj <= q; ++jj) labels.push_back("b" + std::to_string(jj));
            std::vector<std::pair<int, int>> cov;
            for (int i = 1; i < p; ++i) cov.push_back({i - 1, i});
            for (int jj = 1; jj < q; ++jj) cov.push_back({p + jj - 1, p + jj});
            for (int i = 1; i <= p; ++i)
                if (phi[i] > 0) cov.push_back({p + phi[i] - 1, i - 1});
            for (int jj = 1; jj <= q; ++jj)
                if (psi[jj] > 0) cov.push_back({psi[jj] - 1, p + jj - 1});
            try {
                Poset Q = poset_from_covers(labels, cov);
                std::vector<int> ac, bc;
                for (int i = 0; i < p; ++i) ac.push_back(i);
                for (int jj = 0; jj < q; ++jj) bc.push_back(p + jj);
                TwoChainShape sh = shape_from_chains(Q, ac, bc);
                std::vector<char> key;
                for (int i = 0; i <= p; ++i)
                    for (int jj = 0; jj <= q; ++jj) key.push_back(sh.in_a[i][jj]);
                if (seen.insert(key).second) fn(Q, sh);
            } catch (const CycleDetected&) {
            }
            return;
        }
        for (int v = psi[j - 1]; v <= p; ++v) {
            psi[j] = v;
            enum_psi(j + 1);
        }
    };
    enum_phi(1);
}

Poset random_poset(Rng& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) covers.push_back({i, j});
    return poset_from_covers(labels, covers);
}

bool check_companions(const PfaffianBasis& b, const AMatrix& A) {
    CompanionMatrices cm = companion_matrices(b);
    const int r = cm.rank;
    const int n = A.cols;
    auto mul = [&](const std::vector<std::vector<ParamField>>& X,
                   const std::vector<std::vector<ParamField>>& Y) {
        std::vector<std::vector<ParamField>> Z(r, std::vector<ParamField>(r));
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k) {
                if (X[i][k].is_zero()) continue;
                for (int j = 0; j < r; ++j) Z[i][j] = Z[i][j] + X[i][k] * Y[k][j];
            }
        return Z;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mul(cm.matrices[i], cm.matrices[j]) != mul(cm.matrices[j], cm.matrices[i]))
                return false;
    const int arity = b.mode == ParamMode::Symbolic ? A.rows : 0;
    for (int row = 0; row < A.rows; ++row) {
        std::vector<std::vector<ParamField>> S(r, std::vector<ParamField>(r));
        for (int c = 0; c < n; ++c)
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    S[i][j] = S[i][j] + cm.matrices[c][i][j] *
                                            ParamField::from_rat(rat(A.data[row][c]), arity);
        ParamField s = b.mode == ParamMode::Symbolic
                           ? ParamField::parameter(arity, row)
                           : ParamField::from_rat(b.s_values[row], arity);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (S[i][j] != (i == j ? s : ParamField::from_int(0, arity))) return false;
    }
    return true;
}

}  // namespace

int main() {
    // 1: boolean lattice on three atoms, basis and cocycles.
    run(1, "boolean lattice reproduction", 10.0, [] {
        AMatrix A = boolean3_matrix();
        std::vector<std::vector<long long>> expect = {
            {1, 1, 1, 1, 1, 1, 1, 1},
            {0, 1, 0, 0, 1, 1, 0, 1},
            {0, 0, 1, 0, 1, 0, 1, 1},
            {0, 0, 0, 1, 0, 1, 1, 1},
        };
        if (A.data != expect) return false;
        PfaffianBasis b = pfaffian_basis(A);
        if (b.rank != 6) return false;
        auto mono = [](std::initializer_list<unsigned> e) { return Monomial(e); };
        std::set<Monomial> got(b.monos.monos.begin(), b.monos.monos.end());
        std::set<Monomial> want = {
            mono({0, 0, 0, 0, 0, 0, 0, 0}), mono({0, 0, 0, 0, 1, 0, 0, 0}),
            mono({0, 0, 0, 0, 0, 1, 0, 0}), mono({0, 0, 0, 0, 0, 0, 1, 0}),
            mono({0, 0, 0, 0, 0, 0, 0, 1}), mono({0, 0, 0, 0, 0, 0, 0, 2})};
        if (got != want) return false;
        Integrand I = build_integrand(single_block_form(A), IntegrandMode::Power);
        std::string coc = emit_cocycles(b.monos.monos, I, CocycleFormat::Text, true);
        return coc ==
               "1 dt\n"
               "t1*t2*t3 dt/Q\n"
               "t2*t3 dt/Q\n"
               "t1*t3 dt/Q\n"
               "t1*t2 dt/Q\n"
               "t1^2*t2^2*t3^2 dt/Q^2\n";
    });

    // 2: confluent restriction of the same system.
    run(2, "confluent restriction", 10.0, [] {
        AMatrix Ap = confluent_matrix();
        PfaffianBasis b = pfaffian_basis(Ap);
        if (b.rank != 6) return false;
        Integrand I = build_integrand(exponential_block_form(Ap), IntegrandMode::Exponential);
        std::string coc = emit_cocycles(b.monos.monos, I, CocycleFormat::Text, true);
        return coc ==
               "1 dt\n"
               "t1*t2*t3 dt\n"
               "t2*t3 dt\n"
               "t1*t3 dt\n"
               "t1*t2 dt\n"
               "t1^2*t2^2*t3^2 dt\n";
    });

    // 3: bowtie poset, combinatorial basis vs groebner basis.
    run(3, "bowtie combinatorial basis", 10.0, [] {
        Poset P = poset_from_covers({"a1", "a2", "b1", "b2"}, {{0, 1}, {2, 3}, {2, 1}});
        DistributiveLattice L = ideal_lattice(P);
        TwoChainShape sh = two_chain_decompose(P);
        TwoChainBasis tb = two_chain_standard_monomials(sh);
        using Seq = std::vector<std::pair<int, int>>;
        std::set<Seq> got(tb.sequences.begin(), tb.sequences.end());
        std::set<Seq> want = {{}, {{1, 1}}, {{1, 2}}, {{2, 2}}, {{1, 1}, {2, 2}}};
        if (got != want) return false;
        if (count_linear_extensions(P) != 5) return false;
        AMatrix A = lattice_to_amatrix(P, L);
        PfaffianBasis b = pfaffian_basis(A);
        std::set<Monomial> gset(b.monos.monos.begin(), b.monos.monos.end());
        std::set<Monomial> cset;
        for (const auto& s : tb.sequences) cset.insert(seq_to_mono(L, sh, s));
        return gset == cset && b.rank == 5;
    });

    // 4: exhaustive sweep over two-chain shapes with p, q <= 4.
    run(4, "exhaustive shape sweep", 300.0, [] {
        int count = 0, ok = 0;
        for (int p = 1; p <= 4; ++p)
            for (int q = 1; q <= 4; ++q)
                for_each_shape(p, q, [&](const Poset& Q, const TwoChainShape& sh) {
                    ++count;
                    DistributiveLattice L = ideal_lattice(Q);
                    AMatrix A = lattice_to_amatrix(Q, L);
                    PfaffianBasis b = pfaffian_basis(A);
                    TwoChainBasis tb = two_chain_standard_monomials(sh);
                    std::set<Monomial> gset(b.monos.monos.begin(), b.monos.monos.end());
                    std::set<Monomial> cset;
                    for (const auto& s : tb.sequences) cset.insert(seq_to_mono(L, sh, s));
                    Int e = count_linear_extensions(Q);
                    BasisOptions fixed;
                    Int hd = hilbert_degree(initial_toric_ideal(A, fixed).first);
                    if (gset == cset && Int(b.rank) == e && hd == e) ++ok;
                });
        std::cout << "  shapes checked: " << count << std::endl;
        return count >= 50 && ok == count;
    });

    // 5: bouquets of squares.
    run(5, "bouquet of squares", 60.0, [] {
        AMatrix A = bouquet_of_squares_matrix(3);
        IdealGens I = toric_ideal(A);
        GroebnerBasis gb = buchberger(I);
        // Three binomials x_{i0} x_{0i} - x_{00} x_{ii}.
        if (gb.polys.size() != 3) return false;
        for (const auto& g : gb.polys)
            if (g.size() != 2 || mono_deg(g.leading_monomial()) != 2) return false;
        PfaffianBasis b = pfaffian_basis(A);
        if (b.rank != 8) return false;
        // Basis monomials are squarefree products of diagonal columns.
        for (const auto& m : b.monos.monos)
            for (int c = 0; c < A.cols; ++c)
                if (m[c] > 0 && (m[c] > 1 || A.labels[c][0] != A.labels[c][1])) return false;
        Poset sq = antichain_poset(2);
        for (int n = 1; n <= 5; ++n) {
            std::vector<TwoChainShape> shapes(n, two_chain_decompose(sq));
            if (bouquet_standard_monomials(shapes).picks.size() != (size_t{1} << n))
                return false;
            std::vector<const Poset*> ps(n, &sq);
            AMatrix An = free_sum_matrix(ps);
            if (n >= 2 && pfaffian_basis(An).rank != (1 << n)) return false;
        }
        return true;
    });

    // 6: hibi generators stay fixed under Buchberger.
    run(6, "hibi groebner stability", 60.0, [] {
        std::vector<Poset> posets;
        posets.push_back(antichain_poset(3));
        posets.push_back(disjoint_chains({2, 2}));
        posets.push_back(disjoint_chains({1, 3}));
        posets.push_back(disjoint_chains({2, 3}));
        posets.push_back(poset_from_covers({"a1", "a2", "b1", "b2"}, {{0, 1}, {2, 3}, {2, 1}}));
        posets.push_back(chain_poset(5));
        for_each_shape(3, 2, [&](const Poset& Q, const TwoChainShape&) {
            posets.push_back(Q);
        });
        int tested = 0;
        for (const Poset& P : posets) {
            DistributiveLattice L = ideal_lattice(P);
            if (L.size() > 12) continue;
            IdealGens gens = hibi_toric_generators(L);
            if (gens.gens.empty()) continue;
            GroebnerBasis gb = buchberger(gens);
            if (!spairs_reduce_to_zero(gb)) return false;
            std::set<std::string> in, out;
            for (const auto& g : gens.gens) in.insert(g.str());
            for (const auto& g : gb.polys) out.insert(g.str());
            if (in != out) return false;
            ++tested;
        }
        std::cout << "  lattices tested: " << tested << std::endl;
        return tested >= 5;
    });

    // 7: linear extension counting against brute force.
    run(7, "linear extension counts", 60.0, [] {
        if (count_linear_extensions(disjoint_chains({3, 4})) != 35) return false;
        Rng rng(19);
        for (int trial = 0; trial < 80; ++trial) {
            Poset P = random_poset(rng, 3 + trial % 6, 0.3);
            if (count_linear_extensions(P) != count_linear_extensions_bruteforce(P))
                return false;
        }
        return true;
    });

    // 8: the falling-factorial rank bound dominates e(P).
    run(8, "rank bound", 60.0, [] {
        int checked = 0;
        bool violated = false;
        Rng rng(23);
        for (int p = 1; p <= 4; ++p)
            for (int q = 1; q <= 4; ++q)
                for_each_shape(p, q, [&](const Poset& Q, const TwoChainShape& sh) {
                    if (sh.p == 0) return;
                    uint64_t bmask = 0;
                    for (int b : sh.bchain) bmask |= 1ULL << b;
                    Int f = rank_bound(Q, bmask, 2, sh.p);
                    if (count_linear_extensions(Q) > f) violated = true;
                    ++checked;
                });
        if (violated) return false;
        // Wider posets with a removed chain of depth covering the rest.
        for (int trial = 0; checked < 220 && trial < 4000; ++trial) {
            Poset P = random_poset(rng, 5 + trial % 4, 0.4);
            TwoChainShape sh;
            try {
                sh = two_chain_decompose(P);
            } catch (const NotTwoChainDecomposable&) {
                continue;
            }
            if (sh.p == 0 || sh.q == 0) continue;
            uint64_t bmask = 0;
            for (int b : sh.bchain) bmask |= 1ULL << b;
            Int f = rank_bound(P, bmask, 2, sh.p);
            if (count_linear_extensions(P) > f) return false;
            ++checked;
        }
        std::cout << "  instances checked: " << checked << std::endl;
        return checked >= 100;
    });

    // 9: companion matrices commute and satisfy the Euler identity.
    run(9, "companion matrices", 300.0, [] {
        std::vector<AMatrix> mats;
        mats.push_back(lattice_to_amatrix(chain_poset(2), ideal_lattice(chain_poset(2))));
        {
            Poset sq = antichain_poset(2);
            mats.push_back(lattice_to_amatrix(sq, ideal_lattice(sq)));
        }
        mats.push_back(boolean3_matrix());
        {
            Poset g = disjoint_chains({2, 2});
            mats.push_back(lattice_to_amatrix(g, ideal_lattice(g)));
        }
        {
            Poset g = disjoint_chains({2, 3});
            mats.push_back(lattice_to_amatrix(g, ideal_lattice(g)));
        }
        {
            Poset bow = poset_from_covers({"a1", "a2", "b1", "b2"}, {{0, 1}, {2, 3}, {2, 1}});
            mats.push_back(lattice_to_amatrix(bow, ideal_lattice(bow)));
        }
        mats.push_back(bouquet_of_squares_matrix(3));
        mats.push_back(confluent_matrix());
        for (const AMatrix& A : mats) {
            PfaffianBasis b = pfaffian_basis(A);
            if (b.rank > 35) continue;
            if (!check_companions(b, A)) return false;
        }
        // One symbolic instance.
        Poset sq = antichain_poset(2);
        AMatrix A = lattice_to_amatrix(sq, ideal_lattice(sq));
        BasisOptions sym;
        sym.symbolic_s = true;
        return check_companions(pfaffian_basis(A, sym), A);
    });

    // 10: rank stability across independent random weights.
    run(10, "weight robustness", 300.0, [] {
        AMatrix B3 = boolean3_matrix();
        RankReport rep = rank_consistency(B3, 5, 3);
        if (!rep.pass) return false;
        for (const Int& r : rep.ranks)
            if (r != 6) return false;
        Poset g = disjoint_chains({2, 2});
        AMatrix G = lattice_to_amatrix(g, ideal_lattice(g));
        RankReport repg = rank_consistency(G, 5, 11);
        if (!repg.pass || repg.ranks[0] != 6) return false;
        AMatrix Ap = confluent_matrix();
        RankReport repc = rank_consistency(Ap, 5, 17);
        if (!repc.pass) return false;
        for (const Int& r : repc.ranks)
            if (r != 6) return false;
        return true;
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures;
}
