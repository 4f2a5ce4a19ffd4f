#pragma once

#include <optional>

#include "gkz/groebner.hpp"
#include "gkz/orderpoly.hpp"

namespace gkz {

enum class ParamMode { Specialized, Symbolic };

// The Euler forms sum_j a_ij theta_j - s_i, one per row of A.
struct EulerSystem {
    const AMatrix* A = nullptr;
    ParamMode mode = ParamMode::Specialized;
    std::vector<Rat> s_values;  // Specialized mode, size = A->rows
};

// Distraction of in_w(I_A) together with the Euler forms, over the theta ring.
struct DeformedIdeal {
    RingPtr ring;  // theta variables
    std::vector<SparsePoly> distraction_gens;
    std::vector<SparsePoly> euler_forms;
    std::vector<long long> weight;
    ParamMode mode = ParamMode::Specialized;
    std::vector<Rat> s_values;

    IdealGens all_gens() const;
};

struct PfaffianBasis {
    StandardMonomialSet monos;  // exponent vectors, shared by theta and del views
    int rank = 0;
    GroebnerBasis gb;  // reduced GB of the deformed ideal, retained
    std::vector<long long> weight;
    unsigned long long seed = 0;
    ParamMode mode = ParamMode::Specialized;
    std::vector<Rat> s_values;
};

struct CompanionMatrices {
    int rank = 0;
    // matrices[i][j][k]: coefficient of basis element k in theta_i * u_j.
    std::vector<std::vector<std::vector<ParamField>>> matrices;
};

// Lattice-basis binomials of ker A saturated by every variable. The ring has
// one variable per column ("d1".."dn") in graded reverse lexicographic order.
IdealGens toric_ideal(const AMatrix& A);

// One theta polynomial per minimal monomial generator:
// del^alpha |-> prod_i theta_i (theta_i - 1) ... (theta_i - alpha_i + 1).
std::vector<SparsePoly> distraction(const MonomialIdeal& mi, const RingPtr& theta_ring);

enum class WeightMode { Random, TermOrder, Given };

struct BasisOptions {
    WeightMode wmode = WeightMode::TermOrder;
    std::vector<long long> weight;  // Given mode
    unsigned long long seed = 1;
    bool symbolic_s = false;
    int weight_retries = 32;  // NonGenericWeight (Random mode only)
    int reseeds = 8;          // InfiniteStaircase under specialization
    // Priority permutation for the theta ring order (empty = documented
    // default: reverse of the column order, so the top column is smallest).
    std::vector<int> theta_perm;
};

// in_w(I_A) for the weight selected by opts; returns the monomial ideal and
// the weight actually used.
std::pair<MonomialIdeal, std::vector<long long>> initial_toric_ideal(const AMatrix& A,
                                                                     const BasisOptions& opts);

DeformedIdeal build_deformed_ideal(const AMatrix& A, const std::vector<long long>& w,
                                   ParamMode mode, const std::vector<Rat>& s_values = {});

PfaffianBasis pfaffian_basis(const AMatrix& A, const BasisOptions& opts = {});

// M_i = multiplication by theta_i on the basis modulo the deformed ideal.
CompanionMatrices companion_matrices(const PfaffianBasis& basis);

struct RankReport {
    std::vector<Int> ranks;           // one per trial
    std::vector<Int> hilbert_degrees; // degree of in_w(I_A) per trial
    bool pass = false;
};

// Runs pfaffian_basis under `trials` independent random generic weights;
// PASS iff all ranks and all initial-ideal degrees agree.
RankReport rank_consistency(const AMatrix& A, int trials, unsigned long long seed = 1);

// Thread budget: GKZ_MAX_THREADS if set, else hardware_concurrency.
int max_threads();

}  // namespace gkz
