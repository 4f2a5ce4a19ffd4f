#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkz/cohomology.hpp"
#include "gkz/combinatorial.hpp"
#include "gkz/errors.hpp"
#include "gkz/hypergeom.hpp"
#include "gkz/json_io.hpp"

using namespace gkz;
using nlohmann::json;

namespace {

std::string fnv_hex(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

struct Manifest {
    json j;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit Manifest(const std::string& command) {
        j["command"] = command;
        j["version"] = "gkz 1.0";
        j["inputs"] = json::object();
    }
    void input(const std::string& path, const std::string& content) {
        j["inputs"][path] = fnv_hex(content);
    }
    // Timing goes to stderr so outputs stay byte-identical run to run.
    json done() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << j["command"].get<std::string>() << ": " << ms << " ms\n";
        return j;
    }
};

// Combinatorial basis rendered over the lattice columns of J(P).
std::set<Monomial> combinatorial_monomials(const Poset& P, const DistributiveLattice& L) {
    TwoChainShape sh = two_chain_decompose(P);
    TwoChainBasis tb = two_chain_standard_monomials(sh);
    std::set<Monomial> out;
    for (const auto& seq : tb.sequences) {
        Monomial m(L.size(), 0);
        for (auto [i, jj] : seq) {
            uint64_t ideal = 0;
            for (int k = 0; k < i; ++k) ideal |= 1ULL << sh.achain[k];
            for (int k = 0; k < jj; ++k) ideal |= 1ULL << sh.bchain[k];
            m[L.index_of(ideal)] += 1;
        }
        out.insert(m);
    }
    return out;
}

int cmd_poset(const std::string& in_path) {
    std::string text = read_file(in_path);
    Manifest man("poset");
    man.input(in_path, text);
    Poset P = poset_from_json(text);
    DistributiveLattice L = ideal_lattice(P);
    auto [width, rank] = width_and_rank(P);
    json out;
    out["ideals"] = L.size();
    out["linear_extensions"] = count_linear_extensions(P).get_str();
    out["width"] = width;
    out["rank"] = rank;
    try {
        TwoChainShape sh = two_chain_decompose(P);
        json shape;
        shape["p"] = sh.p;
        shape["q"] = sh.q;
        json missing = json::array();
        for (int i = 0; i <= sh.p; ++i)
            for (int j = 0; j <= sh.q; ++j)
                if (!sh.member(i, j)) missing.push_back({i, j});
        shape["missing"] = missing;
        out["two_chain_shape"] = shape;
    } catch (const NotTwoChainDecomposable&) {
        out["two_chain_shape"] = nullptr;
    }
    out["manifest"] = man.done();
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_basis(const std::string& mode, const std::string& matrix_path,
              const std::string& poset_path, const std::string& weight_path,
              unsigned long long seed, bool symbolic_s, int trials,
              const std::string& out_path) {
    Manifest man("basis " + mode);
    AMatrix A;
    Poset P;
    DistributiveLattice L;
    bool have_poset = false;
    if (!poset_path.empty()) {
        std::string t = read_file(poset_path);
        man.input(poset_path, t);
        P = poset_from_json(t);
        L = ideal_lattice(P);
        have_poset = true;
    }
    if (!matrix_path.empty()) {
        std::string t = read_file(matrix_path);
        man.input(matrix_path, t);
        A = amatrix_from_json(t);
    } else if (have_poset) {
        A = lattice_to_amatrix(P, L);
    } else {
        throw PreconditionError("need --matrix or --poset");
    }

    BasisOptions opts;
    opts.seed = seed;
    opts.symbolic_s = symbolic_s;
    if (!weight_path.empty()) {
        std::string t = read_file(weight_path);
        man.input(weight_path, t);
        opts.wmode = WeightMode::Given;
        opts.weight = json::parse(t).get<std::vector<long long>>();
    }

    if (mode == "groebner" || mode == "compare") {
        PfaffianBasis b = pfaffian_basis(A, opts);
        if (trials > 1) {
            RankReport rep = rank_consistency(A, trials, seed);
            if (!rep.pass) {
                std::cerr << "rank disagreement across weights\n";
                return 2;
            }
        }
        if (mode == "compare") {
            if (!have_poset) throw PreconditionError("compare mode needs --poset");
            std::set<Monomial> cset = combinatorial_monomials(P, L);
            std::set<Monomial> gset(b.monos.monos.begin(), b.monos.monos.end());
            if (cset != gset) {
                std::cout << "MISMATCH\n";
                return 2;
            }
            std::cout << "MATCH, " << b.rank << " elements\n";
        }
        json out = json::parse(basis_to_json(b, mode == "compare" ? "compare" : "groebner"));
        out["manifest"] = man.done();
        if (!out_path.empty()) write_file(out_path, out.dump(2));
        if (mode != "compare") std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (mode == "combinatorial") {
        if (!have_poset) throw PreconditionError("combinatorial mode needs --poset");
        std::set<Monomial> cset = combinatorial_monomials(P, L);
        json out;
        out["rank"] = cset.size();
        out["monomials"] = std::vector<Monomial>(cset.begin(), cset.end());
        out["weight"] = json::array();
        out["seed"] = seed;
        out["gb_hash"] = "";
        out["provenance"] = "combinatorial";
        out["manifest"] = man.done();
        if (!out_path.empty()) write_file(out_path, out.dump(2));
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    throw PreconditionError("unknown basis mode: " + mode);
}

int cmd_cocycles(const std::string& matrix_path, const std::string& basis_path,
                 const std::string& mode, const std::string& format, bool normalized) {
    Manifest man("cocycles");
    std::string mt = read_file(matrix_path);
    man.input(matrix_path, mt);
    AMatrix A = amatrix_from_json(mt);
    std::string bt = read_file(basis_path);
    man.input(basis_path, bt);
    BasisFile bf = basis_from_json(bt);

    IntegrandMode im = mode == "exp" ? IntegrandMode::Exponential : IntegrandMode::Power;
    BlockForm blocks =
        im == IntegrandMode::Power ? single_block_form(A) : exponential_block_form(A);
    Integrand I = build_integrand(blocks, im);
    CocycleFormat fmt = CocycleFormat::Text;
    if (format == "json") fmt = CocycleFormat::Json;
    if (format == "latex") fmt = CocycleFormat::Latex;
    std::cout << emit_cocycles(bf.monos, I, fmt, normalized);
    if (fmt == CocycleFormat::Json) std::cout << "\n";
    std::cerr << man.done().dump() << "\n";
    return 0;
}

int cmd_pfaffian(const std::string& matrix_path, unsigned long long seed, bool symbolic_s) {
    Manifest man("pfaffian");
    std::string mt = read_file(matrix_path);
    man.input(matrix_path, mt);
    AMatrix A = amatrix_from_json(mt);
    BasisOptions opts;
    opts.seed = seed;
    opts.symbolic_s = symbolic_s;
    PfaffianBasis b = pfaffian_basis(A, opts);
    CompanionMatrices cm = companion_matrices(b);
    const ParamCtx& ctx = *b.gb.ring->params;
    json out;
    out["rank"] = b.rank;
    json mats = json::array();
    for (int i = 0; i < static_cast<int>(cm.matrices.size()); ++i) {
        json rows = json::array();
        for (int j = 0; j < cm.rank; ++j) {
            json row = json::array();
            for (int k = 0; k < cm.rank; ++k) row.push_back(cm.matrices[i][j][k].str(ctx));
            rows.push_back(row);
        }
        mats.push_back(rows);
    }
    out["matrices"] = mats;
    if (!b.s_values.empty()) {
        json sv = json::array();
        for (const auto& s : b.s_values) sv.push_back(rat_str(s));
        out["parameters"] = sv;
    }
    out["manifest"] = man.done();
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_bouquet(int n, const std::string& out_path) {
    Manifest man("bouquet");
    std::vector<TwoChainShape> shapes;
    std::vector<Poset> squares(n, antichain_poset(2));
    for (int i = 0; i < n; ++i) shapes.push_back(two_chain_decompose(squares[i]));
    BouquetBasis bb = bouquet_standard_monomials(shapes);
    json out;
    out["squares"] = n;
    out["count"] = bb.picks.size();
    json monos = json::array();
    for (const auto& pick : bb.picks) {
        json m = json::array();
        for (int i = 0; i < n; ++i) {
            const auto& seq = bb.parts[i].sequences[pick[i]];
            for (auto [a, b] : seq)
                m.push_back(std::to_string(i + 1) + ":" + std::to_string(a) + std::to_string(b));
        }
        monos.push_back(m);
    }
    out["monomials"] = monos;
    out["manifest"] = man.done();
    if (!out_path.empty()) write_file(out_path, out.dump(2));
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_rankbound(int d, int r, int n) {
    Manifest man("rankbound");
    Int f = falling_factorial(Int(n), static_cast<long>(r) * (d - 1));
    json out;
    out["d"] = d;
    out["r"] = r;
    out["n"] = n;
    out["bound"] = f.get_str();
    out["manifest"] = man.done();
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pfaffian and twisted cohomology bases for hypergeometric systems"};
    app.require_subcommand(1);

    std::string in_path, matrix_path, poset_path, weight_path, basis_path, out_path;
    std::string mode = "groebner", cmode = "power", format = "text";
    unsigned long long seed = 1;
    bool symbolic_s = false, normalized = false;
    int trials = 1, d = 2, r = 1, n = 1;

    auto* poset_cmd = app.add_subcommand("poset", "poset invariants");
    poset_cmd->add_option("--input", in_path)->required();

    auto* basis_cmd = app.add_subcommand("basis", "standard monomial basis");
    basis_cmd->add_option("mode", mode)->check(CLI::IsMember({"groebner", "combinatorial", "compare"}));
    basis_cmd->add_option("--matrix", matrix_path);
    basis_cmd->add_option("--poset", poset_path);
    basis_cmd->add_option("--weight", weight_path);
    basis_cmd->add_option("--seed", seed);
    basis_cmd->add_flag("--symbolic-s", symbolic_s);
    basis_cmd->add_option("--trials", trials);
    basis_cmd->add_option("--out", out_path);

    auto* coc = app.add_subcommand("cocycles", "twisted cohomology representatives");
    coc->add_option("--matrix", matrix_path)->required();
    coc->add_option("--basis", basis_path)->required();
    coc->add_option("--mode", cmode)->check(CLI::IsMember({"power", "exp"}));
    coc->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));
    coc->add_flag("--normalized", normalized);

    auto* pf = app.add_subcommand("pfaffian", "companion matrices of the deformed system");
    pf->add_option("--matrix", matrix_path)->required();
    pf->add_option("--seed", seed);
    pf->add_flag("--symbolic-s", symbolic_s);
    pf->add_flag("--deformed");  // the only supported realization

    auto* bq = app.add_subcommand("bouquet", "product basis for a bouquet of squares");
    bq->add_option("-n,--squares", n)->required();
    bq->add_option("--out", out_path);

    auto* rb = app.add_subcommand("rankbound", "polynomial rank bound");
    rb->add_option("-d", d)->required();
    rb->add_option("-r", r)->required();
    rb->add_option("-n", n)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (poset_cmd->parsed()) return cmd_poset(in_path);
        if (basis_cmd->parsed())
            return cmd_basis(mode, matrix_path, poset_path, weight_path, seed, symbolic_s,
                             trials, out_path);
        if (coc->parsed()) return cmd_cocycles(matrix_path, basis_path, cmode, format, normalized);
        if (pf->parsed()) return cmd_pfaffian(matrix_path, seed, symbolic_s);
        if (bq->parsed()) return cmd_bouquet(n, out_path);
        if (rb->parsed()) return cmd_rankbound(d, r, n);
    } catch (const LimitError& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return 4;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
