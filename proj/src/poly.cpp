#include "swanlab/poly.hpp"

#include <algorithm>
#include <map>

namespace swanlab {

Poly Poly::constant(int p, long long c) {
    Poly out(p);
    int cc = fp::reduce(c, p);
    if (cc != 0) out.terms_.push_back({Mono{}, cc});
    return out;
}

Poly Poly::variable(int p, int var, int exp) {
    Poly out(p);
    Mono m;
    if (var == 1)
        m.e1 = uint16_t(exp);
    else if (var == 2)
        m.e2 = uint16_t(exp);
    else
        throw InputError("generator index must be 1 or 2");
    if (exp == 0)
        out.terms_.push_back({Mono{}, 1});
    else
        out.terms_.push_back({m, 1});
    return out;
}

int Poly::constant_value() const {
    if (terms_.empty()) return 0;
    return terms_[0].c;
}

int Poly::degree_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, int(var == 1 ? t.m.e1 : t.m.e2));
    return d;
}

int Poly::max_var() const {
    int v = 0;
    for (const auto& t : terms_) {
        if (t.m.e2 > 0) return 2;
        if (t.m.e1 > 0) v = 1;
    }
    return v;
}

Poly Poly::from_terms(int p, std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return mono_less(b.m, a.m); });
    Poly out(p);
    for (auto& t : ts) {
        int c = fp::reduce(t.c, p);
        if (c == 0) continue;
        if (!out.terms_.empty() && out.terms_.back().m == t.m) {
            int s = fp::add(out.terms_.back().c, c, p);
            if (s == 0)
                out.terms_.pop_back();
            else
                out.terms_.back().c = s;
        } else {
            out.terms_.push_back({t.m, c});
        }
    }
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out(p_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && mono_less(o.terms_[j].m, terms_[i].m))) {
            out.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || mono_less(terms_[i].m, o.terms_[j].m)) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            int c = fp::add(terms_[i].c, o.terms_[j].c, p_);
            if (c != 0) out.terms_.push_back({terms_[i].m, c});
            ++i, ++j;
        }
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out(p_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.m, fp::neg(t.c, p_)});
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(p_);
    if (is_one()) return o;
    if (o.is_one()) return *this;
    std::vector<Term> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Mono m{uint16_t(a.m.e1 + b.m.e1), uint16_t(a.m.e2 + b.m.e2)};
            prods.push_back({m, fp::mul(a.c, b.c, p_)});
        }
    return from_terms(p_, std::move(prods));
}

Poly Poly::scaled(int c) const {
    c = fp::reduce(c, p_);
    if (c == 0) return Poly(p_);
    if (c == 1) return *this;
    Poly out(p_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.m, fp::mul(t.c, c, p_)});
    return out;
}

Poly Poly::derivative(int var) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) {
        int e = var == 1 ? t.m.e1 : t.m.e2;
        if (e == 0) continue;
        int c = fp::mul(t.c, e % p_, p_);
        if (c == 0) continue;
        Mono m = t.m;
        if (var == 1)
            m.e1 = uint16_t(e - 1);
        else
            m.e2 = uint16_t(e - 1);
        ts.push_back({m, c});
    }
    return from_terms(p_, std::move(ts));
}

Poly Poly::pth_power() const {
    Poly out(p_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({Mono{uint16_t(t.m.e1 * p_), uint16_t(t.m.e2 * p_)}, t.c});
    return out;
}

std::optional<Poly> Poly::pth_root() const {
    for (const auto& t : terms_)
        if (t.m.e1 % p_ != 0 || t.m.e2 % p_ != 0) return std::nullopt;
    Poly out(p_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({Mono{uint16_t(t.m.e1 / p_), uint16_t(t.m.e2 / p_)}, t.c});
    return out;
}

Poly Poly::make_monic() const {
    if (terms_.empty()) return *this;
    return scaled(fp::inv(terms_[0].c, p_));
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) return Poly(p_);
    if (d.is_constant()) return scaled(fp::inv(d.constant_value(), p_));
    Poly rem = *this;
    std::vector<Term> q;
    const Term& dl = d.leading_term();
    int dinv = fp::inv(dl.c, p_);
    while (!rem.is_zero()) {
        const Term& rl = rem.leading_term();
        if (rl.m.e1 < dl.m.e1 || rl.m.e2 < dl.m.e2) return std::nullopt;
        Term t{Mono{uint16_t(rl.m.e1 - dl.m.e1), uint16_t(rl.m.e2 - dl.m.e2)},
               fp::mul(rl.c, dinv, p_)};
        q.push_back(t);
        Poly tq(p_);
        tq.terms_.push_back(t);
        rem = rem - tq * d;
    }
    return from_terms(p_, std::move(q));
}

namespace {

// Univariate view helpers for the bivariate gcd: polynomials in b1 with
// coefficients in F_p[b2].

std::vector<Poly> coeffs_in_b1(const Poly& f) {
    int d = f.degree_in(1);
    std::vector<Poly> cs(size_t(d + 1), Poly(f.p()));
    std::vector<std::vector<Poly::Term>> buckets(size_t(d + 1));
    for (const auto& t : f.terms())
        buckets[t.m.e1].push_back({Mono{0, t.m.e2}, t.c});
    for (int i = 0; i <= d; ++i) cs[size_t(i)] = Poly::from_terms(f.p(), std::move(buckets[size_t(i)]));
    return cs;
}

Poly assemble_in_b1(int p, const std::vector<Poly>& cs) {
    std::vector<Poly::Term> ts;
    for (size_t i = 0; i < cs.size(); ++i)
        for (const auto& t : cs[i].terms()) ts.push_back({Mono{uint16_t(i), t.m.e2}, t.c});
    return Poly::from_terms(p, std::move(ts));
}

Poly shift_b1(int p, const Poly& f, int k) {
    std::vector<Poly::Term> ts;
    for (const auto& t : f.terms()) ts.push_back({Mono{uint16_t(t.m.e1 + k), t.m.e2}, t.c});
    return Poly::from_terms(p, std::move(ts));
}

// Euclid for polynomials in a single variable (b1 xor b2, or constants).
Poly gcd_univariate(Poly a, Poly b) {
    int p = a.p();
    while (!b.is_zero()) {
        // plain remainder: both live in F_p[x] for one variable x
        int var = std::max(a.max_var(), b.max_var());
        if (var == 0) return Poly::constant(p, 1);  // nonzero constants
        // long division of a by b in that variable
        Poly r = a;
        int db = b.degree_in(var);
        int binv = fp::inv(b.leading_term().c, p);
        while (!r.is_zero() && r.degree_in(var) >= db) {
            const auto& rl = r.leading_term();
            int shift = (var == 1 ? rl.m.e1 : rl.m.e2) - db;
            Poly t(p);
            t = Poly::variable(p, var, shift).scaled(fp::mul(rl.c, binv, p));
            r = r - t * b;
        }
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.make_monic();
}

// Pseudo-remainder of a by b viewed in F_p[b2][b1]; deg_{b1}(a) >= deg_{b1}(b).
Poly prem_b1(const Poly& a, const Poly& b) {
    int p = a.p();
    auto ac = coeffs_in_b1(a);
    auto bc = coeffs_in_b1(b);
    int da = int(ac.size()) - 1, db = int(bc.size()) - 1;
    Poly lb = bc[size_t(db)];
    std::vector<Poly> r = ac;
    for (int k = da; k >= db; --k) {
        Poly lead = r[size_t(k)];
        for (int i = 0; i <= k; ++i) r[size_t(i)] = r[size_t(i)] * lb;
        if (!lead.is_zero())
            for (int i = 0; i <= db; ++i)
                r[size_t(k - db + i)] = r[size_t(k - db + i)] - lead * bc[size_t(i)];
        r[size_t(k)] = Poly(p);
        r.resize(size_t(k));
        if (r.empty()) break;
    }
    return r.empty() ? Poly(p) : assemble_in_b1(p, r);
}

Poly content_b1(const Poly& f) {
    Poly c(f.p());
    for (const auto& cf : coeffs_in_b1(f)) c = gcd_univariate(c, cf);
    return c;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    int p = a.p();
    if (a.is_zero()) return b.make_monic();
    if (b.is_zero()) return a.make_monic();
    if (a.is_constant() || b.is_constant()) return Poly::constant(p, 1);
    bool uses_b1 = a.degree_in(1) > 0 || b.degree_in(1) > 0;
    bool uses_b2 = a.degree_in(2) > 0 || b.degree_in(2) > 0;
    if (!(uses_b1 && uses_b2)) return gcd_univariate(a, b);

    // bivariate: primitive Euclid over F_p[b2]
    Poly ca = content_b1(a), cb = content_b1(b);
    Poly f = *a.divide_exact(ca), g = *b.divide_exact(cb);
    Poly cont = gcd_univariate(ca, cb);
    if (f.degree_in(1) < g.degree_in(1)) std::swap(f, g);
    while (!g.is_zero() && g.degree_in(1) > 0) {
        Poly r = prem_b1(f, g);
        f = g;
        if (r.is_zero())
            g = r;
        else
            g = *r.divide_exact(content_b1(r));
    }
    Poly prim = g.is_zero() ? f : Poly::constant(p, 1);
    Poly pp = g.is_zero() ? *prim.divide_exact(content_b1(prim)) : prim;
    return (cont * pp).make_monic();
}

std::string Poly::to_string(int r) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) out += "+";
        first = false;
        std::string mono;
        auto piece = [&](const char* name, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (e != 1) mono += "^" + std::to_string(e);
        };
        piece(r >= 2 ? "b1" : "b", t.m.e1);
        piece("b2", t.m.e2);
        if (mono.empty()) {
            out += std::to_string(t.c);
        } else if (t.c == 1) {
            out += mono;
        } else {
            out += std::to_string(t.c) + "*" + mono;
        }
    }
    return out;
}

}  // namespace swanlab
