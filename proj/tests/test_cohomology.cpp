#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gkz/cohomology.hpp"
#include "gkz/errors.hpp"
#include "gkz/hypergeom.hpp"

using namespace gkz;

static AMatrix boolean_matrix() {
    Poset P = antichain_poset(3);
    return lattice_to_amatrix(P, ideal_lattice(P));
}

TEST_CASE("integrand from a single block") {
    AMatrix A = boolean_matrix();
    Integrand I = build_integrand(single_block_form(A), IntegrandMode::Power);
    CHECK(I.m == 3);
    CHECK(I.k == 1);
    CHECK(I.cols() == 8);
    REQUIRE(I.f.size() == 1);
    CHECK(I.f[0].size() == 8);
    CHECK(I.xnames[0] == "x{}");
    // Columns carry the matrix t-exponents.
    CHECK(I.tcol[7] == Monomial{1, 1, 1});
}

TEST_CASE("integrand from the grid block form") {
    Poset P = disjoint_chains({2, 2});
    AMatrix A = lattice_to_amatrix(P, ideal_lattice(P));
    BlockForm bf = to_block_form(A, two_chain_decompose(P));
    Integrand I = build_integrand(bf, IntegrandMode::Power);
    CHECK(I.m == 2);
    CHECK(I.k == 3);
    for (int j = 0; j < 3; ++j) CHECK(I.f[j].size() == 3);
}

TEST_CASE("malformed block data is rejected") {
    BlockForm bf;
    bf.m = 1;
    bf.k = 1;
    CHECK_THROWS_AS(build_integrand(bf, IntegrandMode::Power), MalformedBlocks);
    bf.cols.push_back({"00", 2, {0}});  // block index out of range
    CHECK_THROWS_AS(build_integrand(bf, IntegrandMode::Power), MalformedBlocks);
}

TEST_CASE("operator action in power mode") {
    AMatrix A = boolean_matrix();
    Integrand I = build_integrand(single_block_form(A), IntegrandMode::Power);
    const ParamCtx& ctx = *I.tring->params;
    // The identity operator.
    RationalForm one = apply_operator(Monomial(8, 0), I);
    CHECK(one.scalar.is_one());
    CHECK(one.t_mono == Monomial{0, 0, 0});
    CHECK(one.fmult == std::vector<int>{0});
    // A single derivative on the top column.
    Monomial u8(8, 0);
    u8[7] = 1;
    RationalForm d8 = apply_operator(u8, I);
    CHECK(d8.scalar.str(ctx) == "alpha1");
    CHECK(d8.t_mono == Monomial{1, 1, 1});
    CHECK(d8.fmult == std::vector<int>{1});
    // The square of that derivative.
    u8[7] = 2;
    RationalForm d88 = apply_operator(u8, I);
    CHECK(d88.scalar.str(ctx) == "(alpha1^2-alpha1)");
    CHECK(d88.t_mono == Monomial{2, 2, 2});
    CHECK(d88.fmult == std::vector<int>{2});
}

TEST_CASE("operator action in exponential mode") {
    AMatrix A = boolean_matrix();
    AMatrix Ap;
    Ap.rows = A.rows - 1;
    Ap.cols = A.cols - 1;
    Ap.homogeneous = false;
    Ap.data.assign(Ap.rows, std::vector<long long>(Ap.cols, 0));
    for (int r = 0; r < Ap.rows; ++r)
        for (int c = 0; c < Ap.cols; ++c) Ap.data[r][c] = A.data[r + 1][c + 1];
    for (int c = 0; c < Ap.cols; ++c) Ap.labels.push_back(A.labels[c + 1]);
    Integrand I = build_integrand(exponential_block_form(Ap), IntegrandMode::Exponential);
    CHECK(I.k == 0);
    Monomial u(7, 0);
    u[3] = 1;  // column {a1,a2}
    RationalForm rf = apply_operator(u, I);
    CHECK(rf.scalar.is_one());
    CHECK(rf.t_mono == Monomial{1, 1, 0});
    CHECK(rf.fmult.empty());
}

TEST_CASE("closed form matches explicit differentiation") {
    // Substitute integer alphas, expand the kernel as a polynomial in the
    // x symbols and t variables, and differentiate directly.
    Poset P = disjoint_chains({2, 2});
    AMatrix A = lattice_to_amatrix(P, ideal_lattice(P));
    BlockForm bf = to_block_form(A, two_chain_decompose(P));
    Integrand I = build_integrand(bf, IntegrandMode::Power);
    const int N = I.cols(), m = I.m, k = I.k;

    std::vector<std::string> vars = I.xnames;
    for (int j = 0; j < m; ++j) vars.push_back("t" + std::to_string(j + 1));
    RingPtr R = make_ring(vars, MonomialOrder::grevlex(N + m));
    auto block_poly = [&](int j) {
        SparsePoly f = SparsePoly::zero(R);
        for (int c = 0; c < N; ++c) {
            if (I.block_of[c] != j) continue;
            Monomial mo(N + m, 0);
            mo[c] = 1;
            for (int t = 0; t < m; ++t) mo[N + t] = I.tcol[c][t];
            f = f + SparsePoly::monomial(R, mo, ParamField::from_rat(rat(1)));
        }
        return f;
    };
    std::vector<int> alpha = {4, 3, 5};
    SparsePoly kernel = SparsePoly::constant(R, ParamField::from_rat(rat(1)));
    std::vector<SparsePoly> f(k);
    for (int j = 0; j < k; ++j) {
        f[j] = block_poly(j);
        for (int e = 0; e < alpha[j]; ++e) kernel = kernel * f[j];
    }

    std::vector<Rat> point(I.tring->params->names.size(), rat(0));
    for (int j = 0; j < k; ++j) point[I.alpha_base + j] = rat(alpha[j]);

    Rng rng(3);
    std::uniform_int_distribution<int> pick(0, N - 1);
    for (int trial = 0; trial < 12; ++trial) {
        Monomial u(N, 0);
        int deg = 1 + trial % 3;
        for (int d = 0; d < deg; ++d) u[pick(rng)] += 1;
        // Direct differentiation of the expanded kernel.
        SparsePoly lhs = kernel;
        for (int c = 0; c < N; ++c)
            for (unsigned e = 0; e < u[c]; ++e) lhs = derivative(lhs, c);
        // Closed form times the remaining kernel powers.
        RationalForm rf = apply_operator(u, I);
        Monomial tm(N + m, 0);
        for (int t = 0; t < m; ++t) tm[N + t] = rf.t_mono[t];
        SparsePoly rhs =
            SparsePoly::monomial(R, tm, ParamField::from_rat(rf.scalar.eval(point)));
        for (int j = 0; j < k; ++j)
            for (int e = 0; e < alpha[j] - rf.fmult[j]; ++e) rhs = rhs * f[j];
        CHECK(lhs == rhs);
    }
}

TEST_CASE("operator action is multiplicative over column splits") {
    AMatrix A = boolean_matrix();
    Integrand I = build_integrand(single_block_form(A), IntegrandMode::Power);
    // u = u1 * u2 on disjoint columns: t-monomials multiply, denominators add.
    Monomial u1(8, 0), u2(8, 0);
    u1[4] = 1;
    u2[6] = 1;
    RationalForm a = apply_operator(u1, I), b = apply_operator(u2, I),
                 ab = apply_operator(mono_mul(u1, u2), I);
    CHECK(ab.t_mono == mono_mul(a.t_mono, b.t_mono));
    CHECK(ab.fmult[0] == a.fmult[0] + b.fmult[0]);
    // Scalar picks up the shifted factor alpha - 1.
    const ParamCtx& ctx = *I.tring->params;
    CHECK(ab.scalar.str(ctx) == "(alpha1^2-alpha1)");
}

TEST_CASE("denominator multiplicity is bounded by operator degree per block") {
    Poset P = disjoint_chains({2, 2});
    AMatrix A = lattice_to_amatrix(P, ideal_lattice(P));
    BlockForm bf = to_block_form(A, two_chain_decompose(P));
    Integrand I = build_integrand(bf, IntegrandMode::Power);
    Rng rng(9);
    std::uniform_int_distribution<int> pick(0, I.cols() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        Monomial u(I.cols(), 0);
        for (int d = 0; d < 3; ++d) u[pick(rng)] += 1;
        RationalForm rf = apply_operator(u, I);
        std::vector<int> per_block(I.k, 0);
        for (int c = 0; c < I.cols(); ++c) per_block[I.block_of[c]] += static_cast<int>(u[c]);
        for (int j = 0; j < I.k; ++j) CHECK(rf.fmult[j] <= per_block[j]);
    }
}

TEST_CASE("cocycle rendering for the boolean lattice basis") {
    AMatrix A = boolean_matrix();
    Integrand I = build_integrand(single_block_form(A), IntegrandMode::Power);
    PfaffianBasis b = pfaffian_basis(A);
    std::string norm = emit_cocycles(b.monos.monos, I, CocycleFormat::Text, true);
    // Basis order is degree then lex on exponent vectors, so the top column
    // comes first among the degree-one elements.
    CHECK(norm ==
          "1 dt\n"
          "t1*t2*t3 dt/Q\n"
          "t2*t3 dt/Q\n"
          "t1*t3 dt/Q\n"
          "t1*t2 dt/Q\n"
          "t1^2*t2^2*t3^2 dt/Q^2\n");
    std::string full = emit_cocycles(b.monos.monos, I, CocycleFormat::Text, false);
    CHECK(full.find("(alpha1)*t1*t2 dt/Q") != std::string::npos);
    CHECK(full.find("((alpha1^2-alpha1))*t1^2*t2^2*t3^2 dt/Q^2") != std::string::npos);
    std::string latex = emit_cocycles(b.monos.monos, I, CocycleFormat::Latex, true);
    CHECK(latex.find("\\frac{t_{1} t_{2}\\,dt}{Q}") != std::string::npos);
    std::string json = emit_cocycles(b.monos.monos, I, CocycleFormat::Json, true);
    CHECK(json.front() == '[');
    CHECK(json.find("{\"scalar\":\"1\",\"t\":[1,1,1],\"denominator\":[1]}") != std::string::npos);
}

TEST_CASE("derivative is linear and satisfies the product rule") {
    RingPtr R = make_ring({"x", "y"}, MonomialOrder::grevlex(2));
    SparsePoly p = parse_poly(R, "x^3*y - 2*x*y^2 + 7");
    SparsePoly q = parse_poly(R, "x*y + 3");
    CHECK(derivative(p, 0) == parse_poly(R, "3*x^2*y - 2*y^2"));
    CHECK(derivative(p * q, 0) == derivative(p, 0) * q + p * derivative(q, 0));
    CHECK(derivative(p + q, 1) == derivative(p, 1) + derivative(q, 1));
}
