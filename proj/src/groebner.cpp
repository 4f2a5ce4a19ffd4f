#include "gkz/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace gkz {

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens)
        if (mono_divides(g, m)) return true;
    return false;
}

void MonomialIdeal::minimalize() {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        int da = mono_deg(a), db = mono_deg(b);
        if (da != db) return da < db;
        return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (mono_divides(h, g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    gens = std::move(out);
}

SparsePoly normal_form(const SparsePoly& p, const GroebnerBasis& gb) {
    SparsePoly rem = SparsePoly::zero(p.ring());
    SparsePoly work = p;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        bool reduced = false;
        for (size_t i = 0; i < gb.polys.size(); ++i) {
            if (!mono_divides(gb.leading[i], lm)) continue;
            ParamField c = work.leading_coeff() / gb.polys[i].leading_coeff();
            work = work.axpy_term(c, mono_div(lm, gb.leading[i]), gb.polys[i]);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem = rem + SparsePoly::monomial(p.ring(), lm, work.leading_coeff());
            work = work.axpy_term(work.leading_coeff(), Monomial(lm.size(), 0),
                                  SparsePoly::monomial(p.ring(), lm, ParamField::from_int(1)));
        }
    }
    return rem;
}

namespace {

SparsePoly s_polynomial(const SparsePoly& f, const SparsePoly& g) {
    Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
    SparsePoly a = SparsePoly::monomial(f.ring(), mono_div(l, f.leading_monomial()),
                                        f.leading_coeff().inverse()) *
                   f;
    SparsePoly b = SparsePoly::monomial(g.ring(), mono_div(l, g.leading_monomial()),
                                        g.leading_coeff().inverse()) *
                   g;
    return a - b;
}

SparsePoly reduce_full(const SparsePoly& p, const std::vector<SparsePoly>& basis) {
    GroebnerBasis gb;
    gb.ring = p.ring();
    gb.polys = basis;
    for (const auto& q : basis) gb.leading.push_back(q.leading_monomial());
    return normal_form(p, gb);
}

struct Pair {
    int i, j;
    Monomial lcm;
    int deg;
};

}  // namespace

GroebnerBasis buchberger(const IdealGens& gens) {
    const RingPtr& ring = gens.ring;
    std::vector<SparsePoly> basis;
    for (const auto& g : gens.gens) {
        SparsePoly p = poly_reduce_coeffs(g);
        if (!p.is_zero()) basis.push_back(p.scaled(p.leading_coeff().inverse()));
    }

    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> pending;
    auto push_pairs = [&](int k) {
        for (int i = 0; i < k; ++i) {
            Pair p;
            p.i = i;
            p.j = k;
            p.lcm = mono_lcm(basis[i].leading_monomial(), basis[k].leading_monomial());
            p.deg = mono_deg(p.lcm);
            pending.push_back(std::move(p));
        }
        std::sort(pending.begin(), pending.end(), pair_less);
    };
    for (int k = 1; k < static_cast<int>(basis.size()); ++k) push_pairs(k);
    std::sort(pending.begin(), pending.end(), pair_less);

    std::set<std::pair<int, int>> done;
    while (!pending.empty()) {
        Pair p = pending.front();
        pending.erase(pending.begin());
        done.insert({p.i, p.j});
        // Buchberger's first criterion.
        if (mono_coprime(basis[p.i].leading_monomial(), basis[p.j].leading_monomial())) continue;
        // Chain criterion: some k with lm_k | lcm(i,j) and both subpairs handled.
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!mono_divides(basis[k].leading_monomial(), p.lcm)) continue;
            auto key1 = std::minmax(p.i, k);
            auto key2 = std::minmax(p.j, k);
            if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;
        SparsePoly s = reduce_full(s_polynomial(basis[p.i], basis[p.j]), basis);
        if (s.is_zero()) continue;
        basis.push_back(s.scaled(s.leading_coeff().inverse()));
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by another's.
    std::vector<SparsePoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (mono_divides(basis[j].leading_monomial(), basis[i].leading_monomial())) {
                if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Inter-reduce tails.
    std::vector<SparsePoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<SparsePoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        SparsePoly r = others.empty() ? minimal[i] : reduce_full(minimal[i], others);
        assert(!r.is_zero());
        reduced.push_back(r.scaled(r.leading_coeff().inverse()));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const SparsePoly& a, const SparsePoly& b) {
        return ring->ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });

    GroebnerBasis gb;
    gb.ring = ring;
    gb.polys = std::move(reduced);
    for (const auto& q : gb.polys) gb.leading.push_back(q.leading_monomial());
    return gb;
}

IdealGens saturate_by_variable(const IdealGens& gens, int var_index) {
    const RingPtr& ring = gens.ring;
    const int n = ring->arity();
    std::vector<std::string> vars = ring->vars;
    vars.push_back("_sat");
    std::vector<long long> w(n + 1, 0);
    w[n] = 1;
    RingPtr ext = make_ring(std::move(vars), MonomialOrder::weighted(std::move(w)), ring->params);

    IdealGens lifted;
    lifted.ring = ext;
    for (const auto& g : gens.gens) {
        std::vector<std::pair<Monomial, ParamField>> ts;
        for (const auto& [m, c] : g.terms()) {
            Monomial e = m;
            e.push_back(0);
            ts.emplace_back(std::move(e), c);
        }
        lifted.gens.emplace_back(ext, std::move(ts));
    }
    // y * x_v - 1
    Monomial yx(n + 1, 0);
    yx[var_index] = 1;
    yx[n] = 1;
    lifted.gens.push_back(SparsePoly::monomial(ext, std::move(yx), ParamField::from_int(1)) -
                          SparsePoly::constant(ext, ParamField::from_int(1)));

    GroebnerBasis gb = buchberger(lifted);
    IdealGens out;
    out.ring = ring;
    for (const auto& p : gb.polys) {
        bool has_y = false;
        for (const auto& [m, c] : p.terms())
            if (m[n] > 0) {
                has_y = true;
                break;
            }
        if (has_y) continue;
        std::vector<std::pair<Monomial, ParamField>> ts;
        for (const auto& [m, c] : p.terms()) {
            Monomial e(m.begin(), m.end() - 1);
            ts.emplace_back(std::move(e), c);
        }
        out.gens.emplace_back(ring, std::move(ts));
    }
    return out;
}

IdealGens saturate_all_variables(const IdealGens& gens) {
    // One pass over the variables equals saturation by the product of all of
    // them: (I : x^inf : y^inf) = (I : (xy)^inf).
    IdealGens cur = gens;
    for (int v = 0; v < gens.ring->arity(); ++v) cur = saturate_by_variable(cur, v);
    return cur;
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
    MonomialIdeal mi;
    mi.arity = gb.ring->arity();
    if (gb.ring->ord.kind == MonomialOrder::Kind::Weight) {
        const auto& w = gb.ring->ord.weight;
        for (const auto& p : gb.polys) {
            long long lw = mono_weight(p.leading_monomial(), w);
            for (size_t t = 1; t < p.terms().size(); ++t)
                if (mono_weight(p.terms()[t].first, w) == lw)
                    throw NonGenericWeight("tied w-leading form in " + p.str());
        }
    }
    for (const auto& m : gb.leading) mi.gens.push_back(m);
    mi.minimalize();
    return mi;
}

StandardMonomialSet standard_monomials(const MonomialIdeal& mi, int arity) {
    for (const auto& g : mi.gens)
        if (mono_deg(g) == 0)
            return StandardMonomialSet{{}, mi};  // unit ideal
    std::vector<unsigned> bound(arity, 0);
    for (int v = 0; v < arity; ++v) {
        bool found = false;
        for (const auto& g : mi.gens) {
            bool pure = g[v] > 0;
            for (int u = 0; u < arity && pure; ++u)
                if (u != v && g[u] > 0) pure = false;
            if (pure) {
                bound[v] = found ? std::min(bound[v], g[v]) : g[v];
                found = true;
            }
        }
        if (!found)
            throw InfiniteStaircase("no pure power of variable index " + std::to_string(v));
    }
    StandardMonomialSet out;
    out.ideal = mi;
    Monomial m(arity, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == arity) {
            if (!mi.contains(m)) out.monos.push_back(m);
            return;
        }
        for (unsigned e = 0; e < bound[v]; ++e) {
            m[v] = e;
            rec(v + 1);
        }
        m[v] = 0;
    };
    rec(0);
    std::sort(out.monos.begin(), out.monos.end(), [](const Monomial& a, const Monomial& b) {
        int da = mono_deg(a), db = mono_deg(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

namespace {

using ZPoly = std::map<int, Int>;  // z-degree -> coefficient

void zp_add(ZPoly& a, const ZPoly& b, int shift, const Int& scale) {
    for (const auto& [d, c] : b) {
        Int& slot = a[d + shift];
        slot += c * scale;
        if (slot == 0) a.erase(d + shift);
    }
}

ZPoly hilbert_numerator(std::vector<Monomial> gens, int arity) {
    MonomialIdeal mi;
    mi.arity = arity;
    mi.gens = std::move(gens);
    mi.minimalize();
    if (mi.gens.empty()) return {{0, 1}};
    bool pairwise_coprime = true;
    for (size_t i = 0; i < mi.gens.size() && pairwise_coprime; ++i)
        for (size_t j = i + 1; j < mi.gens.size() && pairwise_coprime; ++j)
            if (!mono_coprime(mi.gens[i], mi.gens[j])) pairwise_coprime = false;
    if (pairwise_coprime) {
        ZPoly acc{{0, 1}};
        for (const auto& g : mi.gens) {
            ZPoly next;
            zp_add(next, acc, 0, 1);
            zp_add(next, acc, mono_deg(g), -1);
            acc = std::move(next);
        }
        return acc;
    }
    // Pivot on the variable hitting the most generators.
    int best = -1, best_count = -1;
    for (int v = 0; v < arity; ++v) {
        int cnt = 0;
        for (const auto& g : mi.gens)
            if (g[v] > 0) ++cnt;
        if (cnt > best_count) {
            best_count = cnt;
            best = v;
        }
    }
    // N(I) = N(I + (x_v)) + z * N(I : x_v).
    std::vector<Monomial> plus;
    for (const auto& g : mi.gens)
        if (g[best] == 0) plus.push_back(g);
    Monomial xv(arity, 0);
    xv[best] = 1;
    plus.push_back(std::move(xv));
    std::vector<Monomial> colon;
    for (const auto& g : mi.gens) {
        Monomial h = g;
        if (h[best] > 0) --h[best];
        colon.push_back(std::move(h));
    }
    ZPoly a = hilbert_numerator(std::move(plus), arity);
    ZPoly b = hilbert_numerator(std::move(colon), arity);
    zp_add(a, b, 1, 1);
    return a;
}

}  // namespace

Int hilbert_degree(const MonomialIdeal& mi) {
    ZPoly num = hilbert_numerator(mi.gens, mi.arity);
    // Strip all (1-z) factors, then evaluate at 1.
    auto eval1 = [](const ZPoly& p) {
        Int s = 0;
        for (const auto& [d, c] : p) s += c;
        return s;
    };
    while (!num.empty() && eval1(num) == 0) {
        // Synthetic division by (1-z): q_d = sum_{e<=d} n_e.
        ZPoly q;
        int maxd = num.rbegin()->first;
        Int acc = 0;
        for (int d = 0; d < maxd; ++d) {
            auto it = num.find(d);
            if (it != num.end()) acc += it->second;
            if (acc != 0) q[d] = acc;
        }
        num = std::move(q);
    }
    return eval1(num);
}

bool spairs_reduce_to_zero(const GroebnerBasis& gb) {
    for (size_t i = 0; i < gb.polys.size(); ++i)
        for (size_t j = i + 1; j < gb.polys.size(); ++j)
            if (!normal_form(s_polynomial(gb.polys[i], gb.polys[j]), gb).is_zero()) return false;
    return true;
}

bool same_ideal(const IdealGens& a, const IdealGens& b) {
    GroebnerBasis ga = buchberger(a);
    GroebnerBasis gbb = buchberger(b);
    for (const auto& p : a.gens)
        if (!normal_form(p.reordered(b.ring), gbb).is_zero()) return false;
    for (const auto& p : b.gens)
        if (!normal_form(p.reordered(a.ring), ga).is_zero()) return false;
    return true;
}

}  // namespace gkz
