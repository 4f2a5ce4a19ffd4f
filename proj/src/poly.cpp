#include "gkz/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gkz {

int mono_deg(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool mono_divides(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw ArityMismatch();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        assert(a[i] >= b[i]);
        r[i] = a[i] - b[i];
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

long long mono_weight(const Monomial& m, const std::vector<long long>& w) {
    long long s = 0;
    for (size_t i = 0; i < m.size(); ++i) s += static_cast<long long>(m[i]) * w[i];
    return s;
}

MonomialOrder MonomialOrder::grevlex(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    return grevlex_perm(std::move(perm));
}

MonomialOrder MonomialOrder::grevlex_perm(std::vector<int> perm) {
    MonomialOrder o;
    o.kind = Kind::RevLex;
    o.perm = std::move(perm);
    return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<long long> w) {
    std::vector<int> perm(w.size());
    std::iota(perm.begin(), perm.end(), 0);
    return weighted(std::move(w), std::move(perm));
}

MonomialOrder MonomialOrder::weighted(std::vector<long long> w, std::vector<int> tie_perm) {
    MonomialOrder o;
    o.kind = Kind::Weight;
    o.weight = std::move(w);
    o.perm = std::move(tie_perm);
    return o;
}

namespace {

int revlex_compare(const std::vector<int>& perm, bool graded, const Monomial& a, const Monomial& b) {
    if (graded) {
        int da = mono_deg(a), db = mono_deg(b);
        if (da != db) return da < db ? -1 : 1;
    }
    // a > b iff the last (smallest-variable-first) nonzero of a-b is negative.
    for (int k = static_cast<int>(perm.size()) - 1; k >= 0; --k) {
        int v = perm[k];
        if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) throw ArityMismatch();
    if (kind == Kind::Weight) {
        long long wa = mono_weight(a, weight), wb = mono_weight(b, weight);
        if (wa != wb) return wa < wb ? -1 : 1;
    }
    return revlex_compare(perm, graded, a, b);
}

int Ring::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder ord, ParamCtxPtr params) {
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    r->ord = std::move(ord);
    r->params = params ? std::move(params) : no_params();
    return r;
}

RingPtr with_order(const RingPtr& ring, MonomialOrder ord) {
    return make_ring(ring->vars, std::move(ord), ring->params);
}

SparsePoly::SparsePoly(RingPtr ring, std::vector<std::pair<Monomial, ParamField>> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

SparsePoly SparsePoly::constant(RingPtr ring, const ParamField& c) {
    SparsePoly p(ring);
    if (!c.is_zero()) p.terms_.emplace_back(Monomial(ring->arity(), 0), c);
    return p;
}

SparsePoly SparsePoly::monomial(RingPtr ring, Monomial m, ParamField c) {
    SparsePoly p(ring);
    if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
}

SparsePoly SparsePoly::variable(RingPtr ring, int idx, unsigned pow) {
    Monomial m(ring->arity(), 0);
    m.at(idx) = pow;
    return monomial(std::move(ring), std::move(m), ParamField::from_int(1));
}

void SparsePoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [&](const auto& x, const auto& y) {
        return ring_->ord.compare(x.first, y.first) > 0;
    });
    std::vector<std::pair<Monomial, ParamField>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second = out.back().second + t.second;
        else
            out.push_back(std::move(t));
    }
    terms_.clear();
    for (auto& t : out)
        if (!t.second.is_zero()) terms_.push_back(std::move(t));
}

const Monomial& SparsePoly::leading_monomial() const {
    assert(!terms_.empty());
    return terms_.front().first;
}

const ParamField& SparsePoly::leading_coeff() const {
    assert(!terms_.empty());
    return terms_.front().second;
}

ParamField SparsePoly::coeff(const Monomial& m) const {
    for (const auto& [mm, c] : terms_)
        if (mm == m) return c;
    return ParamField();
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
    return r;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r(ring_);
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ring_->ord.compare(terms_[i].first, o.terms_[j].first);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            ParamField s = terms_[i].second + o.terms_[j].second;
            if (!s.is_zero()) r.terms_.emplace_back(terms_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    std::vector<std::pair<Monomial, ParamField>> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) acc.emplace_back(mono_mul(m1, m2), c1 * c2);
    return SparsePoly(ring_, std::move(acc));
}

SparsePoly SparsePoly::scaled(const ParamField& c) const {
    SparsePoly r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, cc] : terms_) r.terms_.emplace_back(m, cc * c);
    return r;
}

SparsePoly SparsePoly::axpy_term(const ParamField& c, const Monomial& m, const SparsePoly& g) const {
    SparsePoly shifted(ring_);
    shifted.terms_.reserve(g.terms_.size());
    for (const auto& [gm, gc] : g.terms_) shifted.terms_.emplace_back(mono_mul(gm, m), gc * (-c));
    return *this + shifted;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].first != o.terms_[i].first || !(terms_[i].second == o.terms_[i].second))
            return false;
    return true;
}

SparsePoly SparsePoly::reordered(const RingPtr& ring) const {
    std::vector<std::pair<Monomial, ParamField>> ts = terms_;
    return SparsePoly(ring, std::move(ts));
}

SparsePoly SparsePoly::specialized(const std::vector<Rat>& vals, RingPtr target) const {
    std::vector<std::pair<Monomial, ParamField>> ts;
    ts.reserve(terms_.size());
    for (const auto& [m, c] : terms_) ts.emplace_back(m, ParamField::from_rat(c.eval(vals)));
    return SparsePoly(std::move(target), std::move(ts));
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const ParamCtx& ctx = *ring_->params;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str(ctx);
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            first = false;
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        std::ostringstream vars;
        bool any = false;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (any) vars << "*";
            vars << ring_->vars[i];
            if (m[i] > 1) vars << "^" << m[i];
            any = true;
        }
        if (!any) {
            os << cs;
        } else if (cs == "1") {
            os << vars.str();
        } else {
            os << cs << "*" << vars.str();
        }
    }
    return os.str();
}

SparsePoly poly_reduce_coeffs(const SparsePoly& p) {
    // Construction keeps terms normalized; rebuilding makes this explicit and
    // idempotent for terms assembled elsewhere.
    std::vector<std::pair<Monomial, ParamField>> ts = p.terms();
    return SparsePoly(p.ring(), std::move(ts));
}

SparsePoly specialize_params(const SparsePoly& p, const std::vector<Rat>& assignment, RingPtr target) {
    return p.specialized(assignment, std::move(target));
}

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;
    explicit Lexer(const std::string& str) : s(str) {}
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
};

}  // namespace

SparsePoly parse_poly(const RingPtr& ring, const std::string& text) {
    Lexer lx(text);
    SparsePoly result = SparsePoly::zero(ring);
    const int np = static_cast<int>(ring->params->names.size());
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        while (!lx.eof() && (lx.peek() == '+' || lx.peek() == '-')) {
            if (lx.peek() == '-') sign = -sign;
            ++lx.i;
        }
        if (lx.eof()) {
            if (first) break;
            throw ParseError("dangling sign in polynomial: " + text);
        }
        first = false;
        Rat coeff = rat(sign);
        Monomial mono(ring->arity(), 0);
        IntPoly pcoeff = IntPoly::constant(np, 1);
        bool expect_factor = true;
        while (expect_factor) {
            lx.skip_ws();
            if (lx.i >= lx.s.size()) throw ParseError("truncated term in: " + text);
            char c = lx.s[lx.i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t j = lx.i;
                while (j < lx.s.size() &&
                       (std::isdigit(static_cast<unsigned char>(lx.s[j])) || lx.s[j] == '/'))
                    ++j;
                coeff *= rat_from_string(lx.s.substr(lx.i, j - lx.i));
                lx.i = j;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t j = lx.i;
                while (j < lx.s.size() && (std::isalnum(static_cast<unsigned char>(lx.s[j])) ||
                                           lx.s[j] == '_' || lx.s[j] == ','))
                    ++j;
                std::string name = lx.s.substr(lx.i, j - lx.i);
                lx.i = j;
                int pow = 1;
                lx.skip_ws();
                if (lx.i < lx.s.size() && lx.s[lx.i] == '^') {
                    ++lx.i;
                    lx.skip_ws();
                    size_t k = lx.i;
                    while (k < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[k]))) ++k;
                    if (k == lx.i) throw ParseError("missing exponent in: " + text);
                    pow = std::stoi(lx.s.substr(lx.i, k - lx.i));
                    lx.i = k;
                }
                int vi = ring->var_index(name);
                if (vi >= 0) {
                    mono[vi] += static_cast<unsigned>(pow);
                } else {
                    int pi = ring->params->index(name);
                    if (pi < 0) throw ParseError("unknown symbol '" + name + "' in: " + text);
                    pcoeff = pcoeff * IntPoly::variable(np, pi, pow);
                }
            } else {
                throw ParseError(std::string("unexpected character '") + c + "' in: " + text);
            }
            lx.skip_ws();
            if (lx.i < lx.s.size() && lx.s[lx.i] == '*') {
                ++lx.i;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        ParamField c = ParamField(pcoeff, IntPoly::constant(np, 1)) * ParamField::from_rat(coeff, np);
        result = result + SparsePoly::monomial(ring, std::move(mono), std::move(c));
    }
    return result;
}

}  // namespace gkz
