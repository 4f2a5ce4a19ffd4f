#include "gkz/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gkz/errors.hpp"

namespace gkz {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

std::string poly_to_json(const SparsePoly& p) {
    json out = json::array();
    const ParamCtx& ctx = *p.ring()->params;
    for (const auto& [m, c] : p.terms()) {
        json term;
        term["coeff"] = c.str(ctx);
        term["exp"] = m;
        out.push_back(term);
    }
    return out.dump();
}

SparsePoly poly_from_json(const RingPtr& ring, const std::string& text) {
    json in = parse(text);
    if (!in.is_array()) throw ParseError("polynomial must be a term array");
    SparsePoly p = SparsePoly::zero(ring);
    for (const auto& term : in) {
        if (!term.contains("coeff") || !term.contains("exp"))
            throw ParseError("term needs coeff and exp");
        Monomial m = term["exp"].get<Monomial>();
        if (static_cast<int>(m.size()) != ring->arity())
            throw ParseError("exponent arity mismatch");
        Rat c = rat_from_string(term["coeff"].get<std::string>());
        p = p + SparsePoly::monomial(ring, m, ParamField::from_rat(c));
    }
    return p;
}

std::string poset_to_json(const Poset& P) {
    json out;
    out["elements"] = P.labels;
    json covers = json::array();
    for (const auto& [lo, hi] : P.covers) covers.push_back({P.labels[lo], P.labels[hi]});
    out["covers"] = covers;
    return out.dump(2);
}

Poset poset_from_json(const std::string& text) {
    json in = parse(text);
    if (!in.contains("elements") || !in.contains("covers"))
        throw ParseError("poset needs elements and covers");
    std::vector<std::string> labels = in["elements"].get<std::vector<std::string>>();
    std::vector<std::pair<int, int>> covers;
    auto find = [&](const std::string& l) {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return static_cast<int>(i);
        throw ParseError("cover references unknown element: " + l);
    };
    for (const auto& c : in["covers"]) {
        if (!c.is_array() || c.size() != 2) throw ParseError("cover must be a pair");
        covers.push_back({find(c[0].get<std::string>()), find(c[1].get<std::string>())});
    }
    return poset_from_covers(std::move(labels), std::move(covers));
}

std::string amatrix_to_json(const AMatrix& A) {
    json out;
    out["rows"] = A.rows;
    out["cols"] = A.cols;
    out["data"] = A.data;
    out["labels"] = A.labels;
    out["homogeneous"] = A.homogeneous;
    return out.dump(2);
}

AMatrix amatrix_from_json(const std::string& text) {
    json in = parse(text);
    AMatrix A;
    try {
        A.rows = in.at("rows").get<int>();
        A.cols = in.at("cols").get<int>();
        A.data = in.at("data").get<std::vector<std::vector<long long>>>();
        A.labels = in.at("labels").get<std::vector<std::string>>();
        A.homogeneous = in.value("homogeneous", false);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    if (static_cast<int>(A.data.size()) != A.rows) throw ParseError("row count mismatch");
    for (const auto& row : A.data)
        if (static_cast<int>(row.size()) != A.cols) throw ParseError("column count mismatch");
    if (static_cast<int>(A.labels.size()) != A.cols) throw ParseError("label count mismatch");
    return A;
}

std::string gb_hash(const GroebnerBasis& gb) {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& p : gb.polys) mix(p.str() + ";");
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string basis_to_json(const PfaffianBasis& b, const std::string& provenance) {
    json out;
    out["rank"] = b.rank;
    out["monomials"] = b.monos.monos;
    out["weight"] = b.weight;
    out["seed"] = b.seed;
    out["gb_hash"] = b.gb.polys.empty() ? "" : gb_hash(b.gb);
    out["provenance"] = provenance;
    return out.dump(2);
}

BasisFile basis_from_json(const std::string& text) {
    json in = parse(text);
    BasisFile f;
    try {
        f.rank = in.at("rank").get<int>();
        f.monos = in.at("monomials").get<std::vector<Monomial>>();
        f.weight = in.value("weight", std::vector<long long>{});
        f.seed = in.value("seed", 0ULL);
        f.gb_hash = in.value("gb_hash", "");
        f.provenance = in.value("provenance", "");
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    return f;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
}

}  // namespace gkz
