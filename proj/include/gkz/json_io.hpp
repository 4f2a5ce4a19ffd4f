#pragma once

#include <string>

#include "gkz/hypergeom.hpp"
#include "gkz/poset.hpp"

namespace gkz {

// Interchange formats. Polynomials travel as term lists
// [{"coeff":"3/2","exp":[..]}], posets as {"elements":[..],"covers":[[..]]},
// matrices as {"rows","cols","data","labels","homogeneous"}.

std::string poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const RingPtr& ring, const std::string& text);

std::string poset_to_json(const Poset& P);
Poset poset_from_json(const std::string& text);

std::string amatrix_to_json(const AMatrix& A);
AMatrix amatrix_from_json(const std::string& text);

// basis.json: exponent vectors, rank, weight, seed, GB hash, provenance tag
// ("groebner" or "combinatorial").
std::string basis_to_json(const PfaffianBasis& b, const std::string& provenance);
struct BasisFile {
    std::vector<Monomial> monos;
    int rank = 0;
    std::vector<long long> weight;
    unsigned long long seed = 0;
    std::string gb_hash;
    std::string provenance;
};
BasisFile basis_from_json(const std::string& text);

// FNV-1a over the printed reduced basis, hex string.
std::string gb_hash(const GroebnerBasis& gb);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gkz
