#include "gkz/param.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace gkz {

IntPoly IntPoly::constant(int arity, Int c) {
    IntPoly p(arity);
    if (c != 0) p.terms.emplace(Exp(arity, 0), std::move(c));
    return p;
}

IntPoly IntPoly::variable(int arity, int idx, int pow) {
    IntPoly p(arity);
    Exp e(arity, 0);
    e.at(idx) = pow;
    p.terms.emplace(std::move(e), 1);
    return p;
}

bool IntPoly::is_constant() const {
    if (terms.empty()) return true;
    if (terms.size() > 1) return false;
    const Exp& e = terms.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Int IntPoly::constant_value() const {
    if (terms.empty()) return 0;
    return terms.begin()->second;
}

void IntPoly::add_term(const Exp& e, const Int& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

IntPoly IntPoly::operator-() const {
    IntPoly r(arity);
    for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    assert(arity == o.arity);
    IntPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    assert(arity == o.arity);
    IntPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, -c);
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    assert(arity == o.arity);
    IntPoly r(arity);
    Exp e(arity);
    for (const auto& [e1, c1] : terms) {
        for (const auto& [e2, c2] : o.terms) {
            for (int i = 0; i < arity; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

IntPoly mul_term(const IntPoly& p, const IntPoly::Exp& e, const Int& c) {
    IntPoly r(p.arity);
    if (c == 0) return r;
    IntPoly::Exp f(p.arity);
    for (const auto& [e1, c1] : p.terms) {
        for (int i = 0; i < p.arity; ++i) f[i] = e1[i] + e[i];
        r.terms.emplace(f, c1 * c);
    }
    return r;
}

int IntPoly::deg(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, e[var]);
    return d;  // -1 for the zero polynomial
}

int IntPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

IntPoly IntPoly::coeff_of(int var, int d) const {
    IntPoly r(arity);
    for (const auto& [e, c] : terms) {
        if (e[var] != d) continue;
        Exp f = e;
        f[var] = 0;
        r.terms.emplace(std::move(f), c);
    }
    return r;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void IntPoly::divexact_int(const Int& g) {
    assert(g != 0);
    for (auto& [e, c] : terms) {
        Int q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        c = q;
    }
}

int IntPoly::sign() const {
    if (terms.empty()) return 0;
    return sgn(terms.rbegin()->second);
}

bool IntPoly::divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& q) {
    assert(!b.is_zero());
    IntPoly rem = a;
    q = IntPoly(a.arity);
    const auto& ltb = *b.terms.rbegin();  // lex-leading term of b
    while (!rem.is_zero()) {
        const auto& lta = *rem.terms.rbegin();
        Exp e(a.arity);
        for (int i = 0; i < a.arity; ++i) {
            e[i] = lta.first[i] - ltb.first[i];
            if (e[i] < 0) return false;
        }
        if (!mpz_divisible_p(lta.second.get_mpz_t(), ltb.second.get_mpz_t())) return false;
        Int c;
        mpz_divexact(c.get_mpz_t(), lta.second.get_mpz_t(), ltb.second.get_mpz_t());
        q.add_term(e, c);
        rem = rem - mul_term(b, e, c);
    }
    return true;
}

namespace {

// Highest parameter index occurring in p, or -1 if p is constant.
int main_var(const IntPoly& p) {
    for (int v = p.arity - 1; v >= 0; --v)
        if (p.deg(v) > 0) return v;
    return -1;
}

IntPoly content_wrt(const IntPoly& p, int var) {
    IntPoly g(p.arity);
    for (int d = 0; d <= p.deg(var); ++d) {
        IntPoly c = p.coeff_of(var, d);
        if (!c.is_zero()) g = IntPoly::gcd(g, c);
    }
    return g;
}

IntPoly primitive_wrt(const IntPoly& p, int var, IntPoly* cont_out = nullptr) {
    if (p.is_zero()) {
        if (cont_out) *cont_out = p;
        return p;
    }
    IntPoly cont = content_wrt(p, var);
    IntPoly q;
    bool ok = IntPoly::divide_exact(p, cont, q);
    assert(ok);
    (void)ok;
    if (cont_out) *cont_out = cont;
    return q;
}

// Pseudo-remainder of f by g in the variable var.
IntPoly prem(IntPoly f, const IntPoly& g, int var) {
    int dg = g.deg(var);
    IntPoly lcg = g.coeff_of(var, dg);
    while (!f.is_zero() && f.deg(var) >= dg) {
        int df = f.deg(var);
        IntPoly lcf = f.coeff_of(var, df);
        IntPoly shift = IntPoly::variable(f.arity, var, df - dg);
        f = lcg * f - shift * lcf * g;
    }
    return f;
}

}  // namespace

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) {
        if (b.sign() < 0) return -b;
        return b;
    }
    if (b.is_zero()) {
        if (a.sign() < 0) return -a;
        return a;
    }
    if (a.is_constant() && b.is_constant()) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.constant_value().get_mpz_t(), b.constant_value().get_mpz_t());
        return constant(a.arity, g);
    }
    int var = std::max(main_var(a), main_var(b));
    IntPoly ca, cb;
    IntPoly f = primitive_wrt(a, var, &ca);
    IntPoly g = primitive_wrt(b, var, &cb);
    IntPoly cg = gcd(ca, cb);
    if (f.deg(var) < g.deg(var)) std::swap(f, g);
    // Primitive PRS.
    while (!g.is_zero()) {
        IntPoly r = prem(f, g, var);
        f = g;
        g = primitive_wrt(r, var);
    }
    IntPoly res = cg * f;
    if (res.sign() < 0) res = -res;
    return res;
}

Rat IntPoly::eval(const std::vector<Rat>& vals) const {
    assert(static_cast<int>(vals.size()) >= arity);
    Rat acc = 0;
    for (const auto& [e, c] : terms) {
        Rat t(c);
        for (int i = 0; i < arity; ++i)
            for (int k = 0; k < e[i]; ++k) t *= vals[i];
        acc += t;
    }
    return acc;
}

std::string IntPoly::str(const ParamCtx& ctx) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest lex terms first.
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Int ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        bool any_var = false;
        std::ostringstream vars;
        for (int i = 0; i < arity; ++i) {
            if (e[i] == 0) continue;
            if (any_var) vars << "*";
            vars << (i < static_cast<int>(ctx.names.size()) ? ctx.names[i] : "p" + std::to_string(i));
            if (e[i] > 1) vars << "^" << e[i];
            any_var = true;
        }
        if (!any_var) {
            os << ac.get_str();
        } else {
            if (ac != 1) os << ac.get_str() << "*";
            os << vars.str();
        }
    }
    return os.str();
}

ParamField::ParamField(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PreconditionError("zero denominator in parameter field");
    reduce();
}

ParamField ParamField::from_rat(const Rat& q, int arity) {
    return ParamField(IntPoly::constant(arity, q.get_num()), IntPoly::constant(arity, q.get_den()));
}

void ParamField::reduce() {
    if (num_.is_zero()) {
        den_ = IntPoly::constant(num_.arity, 1);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!(g.is_constant() && g.constant_value() == 1)) {
        IntPoly qn, qd;
        bool okn = IntPoly::divide_exact(num_, g, qn);
        bool okd = IntPoly::divide_exact(den_, g, qd);
        assert(okn && okd);
        (void)okn;
        (void)okd;
        num_ = std::move(qn);
        den_ = std::move(qd);
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

ParamField ParamField::promote(const ParamField& f, int arity) {
    if (f.arity() == arity) return f;
    assert(f.is_rational());
    return from_rat(f.to_rat(), arity);
}

bool ParamField::is_one() const {
    return num_.is_constant() && den_.is_constant() && !num_.is_zero() &&
           num_.constant_value() == den_.constant_value();
}

Rat ParamField::to_rat() const {
    assert(is_rational());
    if (num_.is_zero()) return 0;
    return Rat(num_.constant_value()) / Rat(den_.constant_value());
}

ParamField ParamField::operator-() const {
    ParamField r = *this;
    r.num_ = -r.num_;
    return r;
}

ParamField ParamField::operator+(const ParamField& o) const {
    int a = std::max(arity(), o.arity());
    ParamField x = promote(*this, a), y = promote(o, a);
    return ParamField(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

ParamField ParamField::operator-(const ParamField& o) const { return *this + (-o); }

ParamField ParamField::operator*(const ParamField& o) const {
    int a = std::max(arity(), o.arity());
    ParamField x = promote(*this, a), y = promote(o, a);
    return ParamField(x.num_ * y.num_, x.den_ * y.den_);
}

ParamField ParamField::operator/(const ParamField& o) const {
    if (o.is_zero()) throw PreconditionError("division by zero in parameter field");
    int a = std::max(arity(), o.arity());
    ParamField x = promote(*this, a), y = promote(o, a);
    return ParamField(x.num_ * y.den_, x.den_ * y.num_);
}

bool ParamField::operator==(const ParamField& o) const {
    int a = std::max(arity(), o.arity());
    ParamField x = promote(*this, a), y = promote(o, a);
    return x.num_ == y.num_ && x.den_ == y.den_;
}

ParamField ParamField::inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    return ParamField(den_, num_);
}

Rat ParamField::eval(const std::vector<Rat>& vals) const {
    Rat d = den_.eval(vals);
    if (d == 0) throw SpecializationSingular();
    return num_.eval(vals) / d;
}

std::string ParamField::str(const ParamCtx& ctx) const {
    if (is_rational()) return to_rat().get_str();
    std::string n = num_.str(ctx);
    if (den_.is_constant() && den_.constant_value() == 1) {
        if (num_.terms.size() > 1) return "(" + n + ")";
        return n;
    }
    return "(" + n + ")/(" + den_.str(ctx) + ")";
}

}  // namespace gkz
